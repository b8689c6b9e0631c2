#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heishom/graph_io.hpp"
#include "heishom/ribbon_graph.hpp"

using namespace heishom;

namespace {

RibbonGraph rose2(bool interleaved) {
  // one vertex, two loop edges; + = tail half, - = head half
  std::vector<int> cyc = interleaved ? std::vector<int>{0, 2, 1, 3} : std::vector<int>{0, 1, 2, 3};
  return make_graph(1, {{0, 0}, {0, 0}}, {cyc});
}

}  // namespace

TEST_CASE("face tracing on the rose graphs") {
  RibbonGraph single = make_graph(2, {{0, 1}}, {{0}, {1}});
  CHECK(trace_faces(single).size() == 1);
  CHECK(trace_faces(rose2(true)).size() == 1);
  CHECK(trace_faces(rose2(false)).size() == 3);
}

TEST_CASE("surface invariants of the roses") {
  SurfaceInvariants interleaved = surface_invariants(rose2(true));
  CHECK(interleaved == SurfaceInvariants{1, 1, -1});
  SurfaceInvariants planar = surface_invariants(rose2(false));
  CHECK(planar == SurfaceInvariants{0, 3, -1});
}

TEST_CASE("two-vertex interleaved graph thickens to the one-holed torus") {
  // vertices v0, v1; edges A: v0->v1 and two loops v1->v0 attached interleaved
  RibbonGraph G = make_graph(2, {{0, 1}, {1, 0}, {1, 0}}, {{3, 5, 0}, {1, 2, 4}},
                             {"v0", "v1"}, {"A", "al", "be"});
  CHECK(surface_invariants(G) == SurfaceInvariants{1, 1, -1});
}

TEST_CASE("malformed graphs are rejected") {
  // half-edge missing from all orders
  CHECK_THROWS_WITH_AS(make_graph(2, {{0, 1}}, {{0}, {}}),
                       doctest::Contains("missing"), std::invalid_argument);
  // half-edge at the wrong vertex
  CHECK_THROWS_AS(make_graph(2, {{0, 1}}, {{1}, {0}}), std::invalid_argument);
  // duplicate listing
  CHECK_THROWS_AS(make_graph(2, {{0, 1}}, {{0, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("isolated vertex is a disk") {
  RibbonGraph point = make_graph(1, {}, {{}});
  CHECK(surface_invariants(point) == SurfaceInvariants{0, 1, 1});
}

TEST_CASE("h1 basis of a tree is empty") {
  RibbonGraph path = make_graph(3, {{0, 1}, {1, 2}}, {{0}, {1, 2}, {3}});
  H1Basis B = h1_basis(path);
  CHECK(B.cycles.empty());
  CHECK(B.nontree_edges.empty());
  CHECK(B.tree_edges.size() == 2);
}

TEST_CASE("h1 basis of the interleaved rose has the standard symplectic form") {
  H1Basis B = h1_basis(rose2(true));
  REQUIRE(B.cycles.size() == 2);
  CHECK(B.J[0][0] == 0);
  CHECK(B.J[0][1] == 1);
  CHECK(B.J[1][0] == -1);
  CHECK(B.J[1][1] == 0);
}

TEST_CASE("standard model shapes") {
  StandardModel disk = standard_model(0, 1);
  CHECK(disk.graph.num_edges() == 1);
  CHECK(disk.graph.num_vertices() == 2);
  CHECK(surface_invariants(disk.graph) == SurfaceInvariants{0, 1, 1});

  StandardModel torus = standard_model(1, 1);
  CHECK(torus.graph.num_edges() == 3);
  CHECK(surface_invariants(torus.graph) == SurfaceInvariants{1, 1, -1});

  StandardModel twice = standard_model(1, 2);
  CHECK(twice.graph.num_edges() == 4);
  CHECK(surface_invariants(twice.graph) == SurfaceInvariants{1, 2, -2});
}

TEST_CASE("standard model intersection matrix realizes the surface pairing") {
  for (int g = 0; g <= 2; ++g)
    for (int m = 1; m <= 3; ++m) {
      StandardModel M = standard_model(g, m);
      CHECK(surface_invariants(M.graph).genus == g);
      CHECK(surface_invariants(M.graph).boundary_components == m);
      H1Basis B = h1_basis(M.graph);
      int N = 2 * g + m - 1;
      REQUIRE((int)B.cycles.size() == N);
      // the single tree edge is A; fundamental cycles follow the loop edges
      REQUIRE(B.nontree_edges == [&] {
        std::vector<int> v;
        for (int e = 1; e <= N; ++e) v.push_back(e);
        return v;
      }());
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          int si = M.edge_slot[B.nontree_edges[i]];
          int sj = M.edge_slot[B.nontree_edges[j]];
          Int expected = intersection_form(M.params, h1_unit(M.params, si), h1_unit(M.params, sj));
          CHECK(B.J[i][j] == expected);
        }
    }
}

TEST_CASE("standard model (1,2) has c in the radical") {
  StandardModel M = standard_model(1, 2);
  H1Basis B = h1_basis(M.graph);
  REQUIRE(B.cycles.size() == 3);
  CHECK(B.J[0][1] == 1);   // a1 . b1
  CHECK(B.J[1][0] == -1);
  CHECK(B.J[0][2] == 0);   // a1 . c1
  CHECK(B.J[1][2] == 0);   // b1 . c1
  CHECK(B.J[2][2] == 0);
}

TEST_CASE("relative validation") {
  StandardModel M = standard_model(1, 1);
  CHECK(validate_relative(M.graph, M.rel).valid);

  RelativeSubgraph empty;
  CHECK(validate_relative(M.graph, empty).valid);

  // interval with a middle vertex: orders compatible vs. interleaved wrongly
  auto two_step = [](const std::vector<int>& middle_order) {
    // A1: x->y, A2: y->z, loop f at y
    RibbonGraph G = make_graph(3, {{0, 1}, {1, 2}, {1, 1}}, {{0}, middle_order, {3}},
                               {"x", "y", "z"}, {"A1", "A2", "f"});
    RelativeSubgraph A;
    RelativeComponent comp;
    comp.is_circle = false;
    comp.steps = {{0, +1}, {1, +1}};
    A.components.push_back(comp);
    return validate_relative(G, A);
  };
  // in = head of A1 (id 1), out = tail of A2 (id 2), loop halves 4,5
  CHECK(two_step({1, 4, 5, 2}).valid);
  ValidationReport bad = two_step({1, 4, 2, 5});
  CHECK(!bad.valid);
  CHECK(bad.message.find("y") != std::string::npos);

  // duplicated edge in A
  RelativeSubgraph dup;
  RelativeComponent c1;
  c1.is_circle = false;
  c1.steps = {{0, +1}};
  dup.components = {c1, c1};
  CHECK(!validate_relative(M.graph, dup).valid);

  // circle component must close
  RelativeSubgraph open_circle;
  RelativeComponent c2;
  c2.is_circle = true;
  c2.steps = {{0, +1}};
  open_circle.components = {c2};
  CHECK(!validate_relative(M.graph, open_circle).valid);

  // circle through a loop edge is fine
  RibbonGraph loopg = make_graph(1, {{0, 0}, {0, 0}}, {{2, 0, 1, 3}}, {"v"}, {"L", "f"});
  RelativeSubgraph circ;
  RelativeComponent c3;
  c3.is_circle = true;
  c3.steps = {{0, +1}};
  circ.components = {c3};
  CHECK(validate_relative(loopg, circ).valid);
}

TEST_CASE("Euler identity and invariant sanity on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RibbonGraph G = random_connected_graph(seed);
    SurfaceInvariants inv = surface_invariants(G);
    CHECK(inv.euler == G.num_vertices() - G.num_edges());
    CHECK(2 - 2 * inv.genus - inv.boundary_components == inv.euler);
    CHECK(inv.genus >= 0);
    CHECK(inv.boundary_components >= 1);

    H1Basis B = h1_basis(G);
    CHECK((int)B.cycles.size() == G.num_edges() - G.num_vertices() + 1);
    for (size_t i = 0; i < B.cycles.size(); ++i)
      for (size_t j = 0; j < B.cycles.size(); ++j)
        CHECK(B.J[i][j] == -B.J[j][i]);
  }
}

TEST_CASE("face count is invariant under relabeling") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RibbonGraph G = random_connected_graph(seed);
    int V = G.num_vertices(), E = G.num_edges();
    // reverse vertex and edge numbering
    auto pv = [&](int v) { return V - 1 - v; };
    auto pe = [&](int e) { return E - 1 - e; };
    std::vector<std::pair<int, int>> edges(E);
    for (int e = 0; e < E; ++e)
      edges[pe(e)] = {pv(G.edge_ends[e].first), pv(G.edge_ends[e].second)};
    std::vector<std::vector<int>> order(V);
    for (int v = 0; v < V; ++v) {
      for (int h : G.order[v]) {
        int e = RibbonGraph::edge_of_half(h);
        int nh = RibbonGraph::is_head_half(h) ? RibbonGraph::head_half(pe(e))
                                              : RibbonGraph::tail_half(pe(e));
        order[pv(v)].push_back(nh);
      }
    }
    RibbonGraph H = make_graph(V, edges, order);
    CHECK(trace_faces(H).size() == trace_faces(G).size());
    CHECK(surface_invariants(H) == surface_invariants(G));
  }
}

TEST_CASE("subdivision preserves surface invariants") {
  for (int g = 0; g <= 2; ++g)
    for (int m = 1; m <= 2; ++m) {
      StandardModel M = standard_model(g, m);
      SubdivisionResult S = subdivide_all_edges(M.graph, M.rel);
      CHECK(surface_invariants(S.graph) == surface_invariants(M.graph));
      CHECK(validate_relative(S.graph, S.rel).valid);
      CHECK(S.graph.num_edges() == 2 * M.graph.num_edges());
      H1Basis B0 = h1_basis(M.graph);
      H1Basis B1 = h1_basis(S.graph);
      CHECK(B0.cycles.size() == B1.cycles.size());
    }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RibbonGraph G = random_connected_graph(seed);
    RelativeSubgraph none;
    SubdivisionResult S = subdivide_all_edges(G, none);
    CHECK(surface_invariants(S.graph) == surface_invariants(G));
  }
}

TEST_CASE("single subdivision bookkeeping") {
  StandardModel M = standard_model(1, 1);
  SubdivisionResult S = subdivide_edge(M.graph, M.rel, 0);  // split A
  CHECK(S.graph.num_vertices() == 3);
  CHECK(S.graph.num_edges() == 4);
  // A's component now has two steps
  REQUIRE(S.rel.components.size() == 1);
  CHECK(S.rel.components[0].steps.size() == 2);
  CHECK(validate_relative(S.graph, S.rel).valid);
  CHECK(surface_invariants(S.graph) == SurfaceInvariants{1, 1, -1});

  // reversed orientation step also splits correctly
  RibbonGraph G = make_graph(2, {{0, 1}, {1, 0}, {1, 0}}, {{3, 5, 0}, {1, 2, 4}});
  RelativeSubgraph A;
  RelativeComponent comp;
  comp.is_circle = false;
  comp.steps = {{0, -1}};  // traverse A againts its stored direction: v1 -> v0
  A.components.push_back(comp);
  SubdivisionResult S2 = subdivide_edge(G, A, 0);
  REQUIRE(S2.rel.components[0].steps.size() == 2);
  // the reversed interval must still chain
  CHECK(S2.rel.components[0].steps[0].second == -1);
  CHECK(S2.rel.components[0].steps[1].second == -1);
}

TEST_CASE("graph file round trip") {
  StandardModel M = standard_model(1, 2);
  std::string text = serialize_graph(M.graph, M.rel);
  ParsedGraph P = parse_graph_text(text);
  CHECK(P.graph.vertex_names == M.graph.vertex_names);
  CHECK(P.graph.edge_names == M.graph.edge_names);
  CHECK(P.graph.edge_ends == M.graph.edge_ends);
  CHECK(P.graph.order == M.graph.order);
  REQUIRE(P.rel.components.size() == 1);
  CHECK(P.rel.components[0].steps == M.rel.components[0].steps);
  CHECK(surface_invariants(P.graph) == surface_invariants(M.graph));
}

TEST_CASE("graph parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph_text(""), doctest::Contains("no vertices"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_graph_text("# only a comment\n"), doctest::Contains("no vertices"),
                       GraphParseError);
  CHECK_THROWS_WITH_AS(parse_graph_text("vertex v0\nedge A v0 v9\n"),
                       doctest::Contains("line 2"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_graph_text("vertex v0\nedge A v0 v9\n"),
                       doctest::Contains("unknown vertex 'v9'"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_graph_text("vertex v0\nvertex v0\n"),
                       doctest::Contains("duplicate vertex"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_graph_text("frobnicate\n"), doctest::Contains("unknown declaration"),
                       GraphParseError);
  // half-edge missing from all cyclic orders is reported by name
  std::string missing =
      "vertex v0\nvertex v1\nedge A v0 v1\norder v0 A+\norder v1\n";
  CHECK_THROWS_WITH_AS(parse_graph_text(missing), doctest::Contains("A-"), GraphParseError);
  // bad relative subgraph
  std::string badrel =
      "vertex v0\nvertex v1\nedge A v0 v1\norder v0 A+\norder v1 A-\nrelative circle A+\n";
  CHECK_THROWS_WITH_AS(parse_graph_text(badrel), doctest::Contains("circle"), GraphParseError);
}

TEST_CASE("deterministic generation") {
  for (std::uint64_t seed : {3ull, 17ull}) {
    RibbonGraph a = random_connected_graph(seed);
    RibbonGraph b = random_connected_graph(seed);
    CHECK(a.edge_ends == b.edge_ends);
    CHECK(a.order == b.order);
  }
  H1Basis x = h1_basis(standard_model(2, 2).graph);
  H1Basis y = h1_basis(standard_model(2, 2).graph);
  CHECK(x.cycles == y.cycles);
  CHECK(x.J == y.J);
}
