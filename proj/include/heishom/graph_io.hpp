#pragma once

#include <stdexcept>
#include <string>

#include "heishom/ribbon_graph.hpp"

namespace heishom {

struct GraphParseError : std::runtime_error {
  int line;
  GraphParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct ParsedGraph {
  RibbonGraph graph;
  RelativeSubgraph rel;
};

// Text interchange format, one declaration per line, '#' starts a comment:
//   vertex <id>
//   edge <id> <from-vertex> <to-vertex>
//   order <vertex> <half-edge>...        half-edge token: <edge-id>+ (tail) or <edge-id>- (head)
//   relative <circle|interval> <step>... step token: <edge-id>+ (forward) or <edge-id>- (reversed)
// The parsed graph is validated; a relative subgraph must pass validate_relative.
ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph parse_graph_file(const std::string& path);

std::string serialize_graph(const RibbonGraph& G, const RelativeSubgraph& A);

}  // namespace heishom
