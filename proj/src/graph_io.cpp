#include "heishom/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace heishom {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string stripped = line.substr(0, line.find('#'));
  std::istringstream iss(stripped);
  std::vector<std::string> toks;
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text) {
  RibbonGraph G;
  RelativeSubgraph rel;
  std::map<std::string, int> vertex_id, edge_id;
  std::vector<char> has_order;

  std::istringstream input(text);
  std::string line;
  int lineno = 0;
  while (std::getline(input, line)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "vertex") {
      if (toks.size() != 2) throw GraphParseError(lineno, "expected: vertex <id>");
      if (vertex_id.count(toks[1]))
        throw GraphParseError(lineno, "duplicate vertex '" + toks[1] + "'");
      vertex_id[toks[1]] = (int)G.vertex_names.size();
      G.vertex_names.push_back(toks[1]);
      G.order.push_back({});
      has_order.push_back(0);
    } else if (kw == "edge") {
      if (toks.size() != 4) throw GraphParseError(lineno, "expected: edge <id> <from> <to>");
      if (edge_id.count(toks[1]))
        throw GraphParseError(lineno, "duplicate edge '" + toks[1] + "'");
      auto from = vertex_id.find(toks[2]);
      auto to = vertex_id.find(toks[3]);
      if (from == vertex_id.end())
        throw GraphParseError(lineno, "unknown vertex '" + toks[2] + "'");
      if (to == vertex_id.end())
        throw GraphParseError(lineno, "unknown vertex '" + toks[3] + "'");
      edge_id[toks[1]] = (int)G.edge_names.size();
      G.edge_names.push_back(toks[1]);
      G.edge_ends.push_back({from->second, to->second});
    } else if (kw == "order") {
      if (toks.size() < 2) throw GraphParseError(lineno, "expected: order <vertex> <half-edges>");
      auto v = vertex_id.find(toks[1]);
      if (v == vertex_id.end())
        throw GraphParseError(lineno, "unknown vertex '" + toks[1] + "'");
      if (has_order[v->second])
        throw GraphParseError(lineno, "duplicate order for vertex '" + toks[1] + "'");
      has_order[v->second] = 1;
      std::vector<int> cyc;
      for (size_t i = 2; i < toks.size(); ++i) {
        const std::string& tok = toks[i];
        char sign = tok.empty() ? '\0' : tok.back();
        if (sign != '+' && sign != '-')
          throw GraphParseError(lineno, "half-edge token '" + tok + "' must end in + or -");
        auto e = edge_id.find(tok.substr(0, tok.size() - 1));
        if (e == edge_id.end())
          throw GraphParseError(lineno, "unknown edge in token '" + tok + "'");
        cyc.push_back(sign == '+' ? RibbonGraph::tail_half(e->second)
                                  : RibbonGraph::head_half(e->second));
      }
      G.order[v->second] = cyc;
    } else if (kw == "relative") {
      if (toks.size() < 3)
        throw GraphParseError(lineno, "expected: relative <circle|interval> <edges>");
      RelativeComponent comp;
      if (toks[1] == "circle") comp.is_circle = true;
      else if (toks[1] == "interval") comp.is_circle = false;
      else throw GraphParseError(lineno, "component type must be 'circle' or 'interval'");
      for (size_t i = 2; i < toks.size(); ++i) {
        const std::string& tok = toks[i];
        char sign = tok.empty() ? '\0' : tok.back();
        if (sign != '+' && sign != '-')
          throw GraphParseError(lineno, "edge token '" + tok + "' must end in + or -");
        auto e = edge_id.find(tok.substr(0, tok.size() - 1));
        if (e == edge_id.end())
          throw GraphParseError(lineno, "unknown edge in token '" + tok + "'");
        comp.steps.push_back({e->second, sign == '+' ? +1 : -1});
      }
      rel.components.push_back(comp);
    } else {
      throw GraphParseError(lineno, "unknown declaration '" + kw + "'");
    }
  }

  if (G.vertex_names.empty()) throw GraphParseError(lineno, "no vertices");
  try {
    G.validate();
  } catch (const std::invalid_argument& err) {
    throw GraphParseError(lineno, err.what());
  }
  if (!rel.empty()) {
    ValidationReport rep = validate_relative(G, rel);
    if (!rep.valid) throw GraphParseError(lineno, "invalid relative subgraph: " + rep.message);
  }
  return {G, rel};
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

std::string serialize_graph(const RibbonGraph& G, const RelativeSubgraph& A) {
  std::ostringstream out;
  for (const std::string& v : G.vertex_names) out << "vertex " << v << "\n";
  for (int e = 0; e < G.num_edges(); ++e)
    out << "edge " << G.edge_names[e] << " " << G.vertex_names[G.edge_ends[e].first] << " "
        << G.vertex_names[G.edge_ends[e].second] << "\n";
  for (int v = 0; v < G.num_vertices(); ++v) {
    out << "order " << G.vertex_names[v];
    for (int h : G.order[v])
      out << " " << G.edge_names[RibbonGraph::edge_of_half(h)]
          << (RibbonGraph::is_head_half(h) ? "-" : "+");
    out << "\n";
  }
  for (const RelativeComponent& comp : A.components) {
    out << "relative " << (comp.is_circle ? "circle" : "interval");
    for (const auto& [e, d] : comp.steps)
      out << " " << G.edge_names[e] << (d > 0 ? "+" : "-");
    out << "\n";
  }
  return out.str();
}

}  // namespace heishom
