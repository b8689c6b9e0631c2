#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heishom/heisenberg.hpp"

namespace heishom {

// Finite graph with a cyclic order of half-edges at every vertex.  Edge e has
// half-edges 2e (tail, at the from-vertex) and 2e+1 (head, at the to-vertex).
struct RibbonGraph {
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;
  std::vector<std::pair<int, int>> edge_ends;  // (from, to) per edge
  std::vector<std::vector<int>> order;         // cyclic half-edge lists per vertex

  int num_vertices() const { return (int)order.size(); }
  int num_edges() const { return (int)edge_ends.size(); }

  static int tail_half(int e) { return 2 * e; }
  static int head_half(int e) { return 2 * e + 1; }
  static int edge_of_half(int h) { return h / 2; }
  static bool is_head_half(int h) { return (h & 1) != 0; }
  static int partner(int h) { return h ^ 1; }

  int vertex_of_half(int h) const {
    const auto& e = edge_ends[edge_of_half(h)];
    return is_head_half(h) ? e.second : e.first;
  }
  std::string half_name(int h) const {
    return edge_names[edge_of_half(h)] + (is_head_half(h) ? "-" : "+");
  }

  void validate() const;  // throws std::invalid_argument on malformed structure
  bool is_connected() const;
};

// Convenience constructor with auto-generated names where omitted.
RibbonGraph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::vector<int>>& order,
                       std::vector<std::string> vertex_names = {},
                       std::vector<std::string> edge_names = {});

// Oriented subgraph A: disjoint circles and intervals listed as edge steps
// (edge id, +1 along the stored orientation / -1 against it).
struct RelativeComponent {
  bool is_circle = false;
  std::vector<std::pair<int, int>> steps;
};

struct RelativeSubgraph {
  std::vector<RelativeComponent> components;

  bool empty() const { return components.empty(); }
  std::vector<char> edge_mask(const RibbonGraph& G) const;
  std::vector<char> vertex_mask(const RibbonGraph& G) const;
};

struct ValidationReport {
  bool valid = true;
  std::string message = "ok";
};

// Checks that A is a disjoint union of simple oriented circles/intervals and
// that at every A-vertex the cyclic order reads (incoming-A, non-A..., outgoing-A).
ValidationReport validate_relative(const RibbonGraph& G, const RelativeSubgraph& A);

// Boundary cycles of the thickened surface: orbits of half-edges under
// "cross to the partner, then advance to the next half-edge at that vertex".
std::vector<std::vector<int>> trace_faces(const RibbonGraph& G);

struct SurfaceInvariants {
  int genus = 0;
  int boundary_components = 0;
  int euler = 0;

  bool operator==(const SurfaceInvariants& o) const {
    return genus == o.genus && boundary_components == o.boundary_components && euler == o.euler;
  }
};

SurfaceInvariants surface_invariants(const RibbonGraph& G);

// Fundamental cycles from a breadth-first spanning tree, plus the matrix of
// signed crossing numbers between cycle pairs computed in the thickening.
struct H1Basis {
  std::vector<int> tree_edges;
  std::vector<int> nontree_edges;
  // each cycle: the non-tree edge forward, then the tree path back
  std::vector<std::vector<std::pair<int, int>>> cycles;  // steps (edge, dir)
  std::vector<std::vector<Int>> J;
};

H1Basis h1_basis(const RibbonGraph& G);

// Signed intersection numbers of arbitrary closed edge-cycles (steps as above).
std::vector<std::vector<Int>> cycle_intersections(
    const RibbonGraph& G, const std::vector<std::vector<std::pair<int, int>>>& cycles);

// Relative model of the surface (g,m) with an interval A in its boundary:
// vertices v0, v1; edge A: v0 -> v1; loop edges e_1..e_{2g+m-1}: v1 -> v0,
// with e_{2r-1}, e_{2r} the handle pair (a_r, b_r) and e_{2g+t} the c_t curve.
struct StandardModel {
  SurfaceParams params;
  RibbonGraph graph;
  RelativeSubgraph rel;
  // H1 basis slot represented by the fundamental cycle of loop edge i (1-based
  // edge ids 1..2g+m-1; slot layout as in heisenberg.hpp).  edge_slot[0] = -1.
  std::vector<int> edge_slot;
};

StandardModel standard_model(int g, int m);

// Insert a degree-2 vertex in the middle of edge e.  The second returned id is
// the new edge (old edge keeps the from-side half).  A, when given, is updated
// (subdividing an A-edge extends its component by the new edge).
struct SubdivisionResult {
  RibbonGraph graph;
  RelativeSubgraph rel;
  int new_vertex = -1;
  int new_edge = -1;
};

SubdivisionResult subdivide_edge(const RibbonGraph& G, const RelativeSubgraph& A, int e);

// Subdivide every edge of the original graph once (deterministic order).
SubdivisionResult subdivide_all_edges(const RibbonGraph& G, const RelativeSubgraph& A);

// Deterministic pseudorandom connected ribbon graph with at most max_edges
// edges; never produces isolated vertices unless the graph is a single vertex.
RibbonGraph random_connected_graph(std::uint64_t seed, int max_edges = 6);

}  // namespace heishom
