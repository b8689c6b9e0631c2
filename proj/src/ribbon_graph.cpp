#include "heishom/ribbon_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace heishom {

void RibbonGraph::validate() const {
  int V = num_vertices();
  int E = num_edges();
  if ((int)vertex_names.size() != V) throw std::invalid_argument("vertex name table size mismatch");
  if ((int)edge_names.size() != E) throw std::invalid_argument("edge name table size mismatch");
  for (const auto& e : edge_ends)
    if (e.first < 0 || e.first >= V || e.second < 0 || e.second >= V)
      throw std::invalid_argument("edge endpoint out of range");
  std::vector<int> seen(2 * E, 0);
  for (int v = 0; v < V; ++v)
    for (int h : order[v]) {
      if (h < 0 || h >= 2 * E) throw std::invalid_argument("half-edge id out of range");
      if (seen[h]++) throw std::invalid_argument("half-edge " + half_name(h) + " listed twice");
      if (vertex_of_half(h) != v)
        throw std::invalid_argument("half-edge " + half_name(h) + " listed at vertex " +
                                    vertex_names[v] + " but incident to " +
                                    vertex_names[vertex_of_half(h)]);
    }
  for (int h = 0; h < 2 * E; ++h)
    if (!seen[h])
      throw std::invalid_argument("half-edge " + half_name(h) + " missing from all cyclic orders");
}

bool RibbonGraph::is_connected() const {
  int V = num_vertices();
  if (V == 0) return false;
  std::vector<std::vector<int>> adj(V);
  for (const auto& e : edge_ends) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<char> vis(V, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == V;
}

RibbonGraph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::vector<int>>& order,
                       std::vector<std::string> vertex_names,
                       std::vector<std::string> edge_names) {
  RibbonGraph G;
  G.edge_ends = edges;
  G.order = order;
  if ((int)order.size() != num_vertices)
    throw std::invalid_argument("cyclic order list size mismatch");
  G.vertex_names = std::move(vertex_names);
  while ((int)G.vertex_names.size() < num_vertices)
    G.vertex_names.push_back("v" + std::to_string(G.vertex_names.size()));
  G.edge_names = std::move(edge_names);
  while ((int)G.edge_names.size() < (int)edges.size())
    G.edge_names.push_back("e" + std::to_string(G.edge_names.size() + 1));
  G.validate();
  return G;
}

std::vector<char> RelativeSubgraph::edge_mask(const RibbonGraph& G) const {
  std::vector<char> mask(G.num_edges(), 0);
  for (const auto& comp : components)
    for (const auto& [e, d] : comp.steps) {
      if (e < 0 || e >= G.num_edges()) throw std::invalid_argument("relative edge out of range");
      mask[e] = 1;
    }
  return mask;
}

std::vector<char> RelativeSubgraph::vertex_mask(const RibbonGraph& G) const {
  std::vector<char> mask(G.num_vertices(), 0);
  for (const auto& comp : components)
    for (const auto& [e, d] : comp.steps) {
      if (e < 0 || e >= G.num_edges()) throw std::invalid_argument("relative edge out of range");
      mask[G.edge_ends[e].first] = 1;
      mask[G.edge_ends[e].second] = 1;
    }
  return mask;
}

namespace {

int step_from_vertex(const RibbonGraph& G, std::pair<int, int> step) {
  return step.second > 0 ? G.edge_ends[step.first].first : G.edge_ends[step.first].second;
}
int step_to_vertex(const RibbonGraph& G, std::pair<int, int> step) {
  return step.second > 0 ? G.edge_ends[step.first].second : G.edge_ends[step.first].first;
}
// half-edge through which the step leaves its departure vertex
int step_out_half(std::pair<int, int> step) {
  return step.second > 0 ? RibbonGraph::tail_half(step.first) : RibbonGraph::head_half(step.first);
}
// half-edge through which the step arrives at its target vertex
int step_in_half(std::pair<int, int> step) {
  return step.second > 0 ? RibbonGraph::head_half(step.first) : RibbonGraph::tail_half(step.first);
}

}  // namespace

ValidationReport validate_relative(const RibbonGraph& G, const RelativeSubgraph& A) {
  G.validate();
  std::vector<char> edge_used(G.num_edges(), 0);
  std::vector<char> vertex_used(G.num_vertices(), 0);
  // incoming/outgoing A half-edge at each A-vertex (at most one each)
  std::vector<int> in_half(G.num_vertices(), -1), out_half(G.num_vertices(), -1);

  for (size_t ci = 0; ci < A.components.size(); ++ci) {
    const RelativeComponent& comp = A.components[ci];
    std::string where = "relative component " + std::to_string(ci + 1);
    if (comp.steps.empty()) return {false, where + " is empty"};
    std::vector<char> local_vertex(G.num_vertices(), 0);
    for (size_t si = 0; si < comp.steps.size(); ++si) {
      const auto& step = comp.steps[si];
      if (step.first < 0 || step.first >= G.num_edges())
        return {false, where + ": edge id out of range"};
      if (step.second != 1 && step.second != -1)
        return {false, where + ": step direction must be +1 or -1"};
      if (edge_used[step.first])
        return {false, where + ": edge " + G.edge_names[step.first] + " used twice in A"};
      edge_used[step.first] = 1;
      if (si + 1 < comp.steps.size() &&
          step_to_vertex(G, step) != step_from_vertex(G, comp.steps[si + 1]))
        return {false, where + ": steps do not chain at edge " + G.edge_names[step.first]};
      int v = step_to_vertex(G, step);
      if (in_half[v] >= 0)
        return {false, where + ": vertex " + G.vertex_names[v] + " has two incoming A-edges"};
      in_half[v] = step_in_half(step);
      int w = step_from_vertex(G, step);
      if (out_half[w] >= 0)
        return {false, where + ": vertex " + G.vertex_names[w] + " has two outgoing A-edges"};
      out_half[w] = step_out_half(step);
    }
    int start = step_from_vertex(G, comp.steps.front());
    int end = step_to_vertex(G, comp.steps.back());
    if (comp.is_circle && start != end) return {false, where + ": circle does not close"};
    if (!comp.is_circle && start == end) return {false, where + ": interval closes on itself"};
    // simplicity: no vertex revisited inside the component (circle end = start allowed)
    std::vector<int> visited;
    visited.push_back(start);
    for (size_t si = 0; si < comp.steps.size(); ++si) {
      int v = step_to_vertex(G, comp.steps[si]);
      bool last = si + 1 == comp.steps.size();
      if (comp.is_circle && last) break;
      visited.push_back(v);
    }
    std::set<int> dedup(visited.begin(), visited.end());
    if (dedup.size() != visited.size())
      return {false, where + " is not a simple path/cycle"};
    for (int v : dedup) {
      if (vertex_used[v])
        return {false, where + ": vertex " + G.vertex_names[v] + " shared between A-components"};
      local_vertex[v] = 1;
    }
    for (int v = 0; v < G.num_vertices(); ++v)
      if (local_vertex[v]) vertex_used[v] = 1;
  }

  // compatibility of the cyclic orders: (incoming-A, non-A..., outgoing-A)
  std::vector<char> amask = A.edge_mask(G);
  for (int v = 0; v < G.num_vertices(); ++v) {
    // no stray A half-edges beyond the recorded in/out
    for (int h : G.order[v]) {
      if (!amask[RibbonGraph::edge_of_half(h)]) continue;
      if (h != in_half[v] && h != out_half[v])
        return {false, "vertex " + G.vertex_names[v] + ": unexpected A half-edge " +
                           G.half_name(h)};
    }
    if (in_half[v] < 0 || out_half[v] < 0) continue;  // interval endpoint: no constraint
    const std::vector<int>& cyc = G.order[v];
    for (size_t i = 0; i < cyc.size(); ++i)
      if (cyc[i] == out_half[v]) {
        int next = cyc[(i + 1) % cyc.size()];
        if (next != in_half[v])
          return {false, "vertex " + G.vertex_names[v] +
                             ": cyclic order must read (incoming-A, non-A..., outgoing-A)"};
      }
  }
  return {true, "ok"};
}

std::vector<std::vector<int>> trace_faces(const RibbonGraph& G) {
  G.validate();
  int E2 = 2 * G.num_edges();
  std::vector<int> vert(E2, -1), pos(E2, -1);
  for (int v = 0; v < G.num_vertices(); ++v)
    for (int i = 0; i < (int)G.order[v].size(); ++i) {
      vert[G.order[v][i]] = v;
      pos[G.order[v][i]] = i;
    }
  auto advance = [&](int h) {
    int p = RibbonGraph::partner(h);
    const std::vector<int>& cyc = G.order[vert[p]];
    return cyc[(pos[p] + 1) % cyc.size()];
  };
  std::vector<char> used(E2, 0);
  std::vector<std::vector<int>> faces;
  for (int h0 = 0; h0 < E2; ++h0) {
    if (used[h0]) continue;
    std::vector<int> face;
    int h = h0;
    do {
      used[h] = 1;
      face.push_back(h);
      h = advance(h);
    } while (h != h0);
    faces.push_back(std::move(face));
  }
  // an isolated vertex thickens to a disk and contributes one boundary circle
  for (int v = 0; v < G.num_vertices(); ++v)
    if (G.order[v].empty()) faces.push_back({});
  return faces;
}

SurfaceInvariants surface_invariants(const RibbonGraph& G) {
  if (!G.is_connected()) throw std::invalid_argument("surface invariants require a connected graph");
  int m = (int)trace_faces(G).size();
  int chi = G.num_vertices() - G.num_edges();
  int twog = 2 - chi - m;
  if (twog < 0 || twog % 2 != 0) throw std::logic_error("inconsistent face trace");
  return {twog / 2, m, chi};
}

H1Basis h1_basis(const RibbonGraph& G) {
  G.validate();
  if (!G.is_connected()) throw std::invalid_argument("h1 basis requires a connected graph");
  int V = G.num_vertices();
  int E = G.num_edges();
  std::vector<std::vector<std::pair<int, int>>> adj(V);
  for (int e = 0; e < E; ++e) {
    adj[G.edge_ends[e].first].push_back({e, +1});
    if (G.edge_ends[e].second != G.edge_ends[e].first)
      adj[G.edge_ends[e].second].push_back({e, -1});
  }
  std::vector<int> parent_edge(V, -1), parent_dir(V, 0), depth(V, -1);
  std::vector<char> in_tree(E, 0);
  std::queue<int> q;
  q.push(0);
  depth[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [e, d] : adj[v]) {
      int w = d > 0 ? G.edge_ends[e].second : G.edge_ends[e].first;
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent_edge[w] = e;
        parent_dir[w] = d;  // edge e traversed with dir d goes parent -> w
        in_tree[e] = 1;
        q.push(w);
      }
    }
  }
  auto parent_of = [&](int v) {
    int e = parent_edge[v];
    return parent_dir[v] > 0 ? G.edge_ends[e].first : G.edge_ends[e].second;
  };
  // tree path from x to y via the nearest common ancestor
  auto tree_path = [&](int x, int y) {
    std::vector<std::pair<int, int>> up;    // x towards the ancestor
    std::vector<std::pair<int, int>> down;  // ancestor towards y, built backwards
    int a = x, b = y;
    while (depth[a] > depth[b]) {
      up.push_back({parent_edge[a], -parent_dir[a]});
      a = parent_of(a);
    }
    while (depth[b] > depth[a]) {
      down.push_back({parent_edge[b], parent_dir[b]});
      b = parent_of(b);
    }
    while (a != b) {
      up.push_back({parent_edge[a], -parent_dir[a]});
      a = parent_of(a);
      down.push_back({parent_edge[b], parent_dir[b]});
      b = parent_of(b);
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  };

  H1Basis basis;
  for (int e = 0; e < E; ++e)
    (in_tree[e] ? basis.tree_edges : basis.nontree_edges).push_back(e);
  for (int e : basis.nontree_edges) {
    std::vector<std::pair<int, int>> cycle{{e, +1}};
    auto back = tree_path(G.edge_ends[e].second, G.edge_ends[e].first);
    cycle.insert(cycle.end(), back.begin(), back.end());
    basis.cycles.push_back(std::move(cycle));
  }
  basis.J = cycle_intersections(G, basis.cycles);
  return basis;
}

std::vector<std::vector<Int>> cycle_intersections(
    const RibbonGraph& G, const std::vector<std::vector<std::pair<int, int>>>& cycles) {
  G.validate();
  int E = G.num_edges();
  int n = (int)cycles.size();

  struct Strand {
    int edge;
    int dir;
  };
  std::vector<Strand> strands;
  std::vector<std::vector<int>> strand_of(n);     // strand ids per cycle step
  std::vector<std::vector<int>> band_strands(E);  // per edge, by increasing height
  for (int ci = 0; ci < n; ++ci) {
    for (const auto& [e, d] : cycles[ci]) {
      if (e < 0 || e >= E || (d != 1 && d != -1))
        throw std::invalid_argument("malformed cycle step");
      strands.push_back({e, d});
      strand_of[ci].push_back((int)strands.size() - 1);
      band_strands[e].push_back((int)strands.size() - 1);
    }
  }

  // disk boundary slots per vertex: expand each half-edge arc of the cyclic
  // order into the strands of its band, heights ascending at a tail arc and
  // descending at a head arc (the band is glued orientation-reversingly)
  int V = G.num_vertices();
  std::vector<std::map<std::pair<int, int>, int>> slot(V);  // (strand, end: 0=tail,1=head) -> pos
  std::vector<int> slot_count(V, 0);
  for (int v = 0; v < V; ++v)
    for (int h : G.order[v]) {
      const std::vector<int>& bs = band_strands[RibbonGraph::edge_of_half(h)];
      if (!RibbonGraph::is_head_half(h))
        for (int i = 0; i < (int)bs.size(); ++i) slot[v][{bs[i], 0}] = slot_count[v]++;
      else
        for (int i = (int)bs.size() - 1; i >= 0; --i) slot[v][{bs[i], 1}] = slot_count[v]++;
    }

  struct Chord {
    int cycle;
    int slot_in;
    int slot_out;
  };
  std::vector<std::vector<Chord>> chords(V);
  for (int ci = 0; ci < n; ++ci) {
    int L = (int)cycles[ci].size();
    for (int si = 0; si < L; ++si) {
      int sj = (si + 1) % L;
      const auto& arrive = cycles[ci][si];
      const auto& depart = cycles[ci][sj];
      int va = step_to_vertex(G, arrive);
      if (va != step_from_vertex(G, depart))
        throw std::invalid_argument("cycle is not closed");
      int end_in = arrive.second > 0 ? 1 : 0;
      int end_out = depart.second > 0 ? 0 : 1;
      chords[va].push_back({ci, slot[va].at({strand_of[ci][si], end_in}),
                            slot[va].at({strand_of[ci][sj], end_out})});
    }
  }

  std::vector<std::vector<Int>> J(n, std::vector<Int>(n, Int(0)));
  for (int v = 0; v < V; ++v) {
    int S = slot_count[v];
    for (const Chord& p : chords[v])
      for (const Chord& q : chords[v]) {
        if (p.cycle == q.cycle) continue;
        auto rel = [&](int z) { return ((z - p.slot_in) % S + S) % S; };
        int po = rel(p.slot_out), qi = rel(q.slot_in), qo = rel(q.slot_out);
        // chords cross iff exactly one endpoint of q lies on the arc
        // (p.in, p.out); sign +1 for counterclockwise (p.in, q.in, p.out, q.out)
        if (qi < po && qo > po)
          J[p.cycle][q.cycle] += 1;
        else if (qo < po && qi > po)
          J[p.cycle][q.cycle] -= 1;
      }
  }
  return J;
}

StandardModel standard_model(int g, int m) {
  if (g < 0 || m < 1) throw std::invalid_argument("standard model requires g >= 0 and m >= 1");
  int N = 2 * g + m - 1;
  StandardModel M;
  M.params = {g, m};

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> enames;
  edges.push_back({0, 1});  // A: v0 -> v1
  enames.push_back("A");
  for (int i = 1; i <= N; ++i) {
    edges.push_back({1, 0});  // loop edges run from the end of A back to its origin
    enames.push_back("e" + std::to_string(i));
  }

  std::vector<int> ord0;
  for (int i = 1; i <= N; ++i) ord0.push_back(RibbonGraph::head_half(i));
  ord0.push_back(RibbonGraph::tail_half(0));

  // attachment order at v1: boundary edges first (descending), then handle
  // pairs in descending handle order
  std::vector<int> rho;
  for (int t = m - 1; t >= 1; --t) rho.push_back(2 * g + t);
  for (int r = g; r >= 1; --r) {
    rho.push_back(2 * r - 1);
    rho.push_back(2 * r);
  }
  std::vector<int> ord1{RibbonGraph::head_half(0)};
  for (int e : rho) ord1.push_back(RibbonGraph::tail_half(e));

  M.graph = make_graph(2, edges, {ord0, ord1}, {"v0", "v1"}, enames);

  RelativeComponent comp;
  comp.is_circle = false;
  comp.steps = {{0, +1}};
  M.rel.components.push_back(comp);

  M.edge_slot.assign(N + 1, -1);
  for (int r = 1; r <= g; ++r) {
    M.edge_slot[2 * r - 1] = slot_a(M.params, r);
    M.edge_slot[2 * r] = slot_b(M.params, r);
  }
  for (int t = 1; t <= m - 1; ++t) M.edge_slot[2 * g + t] = slot_c(M.params, t);

  ValidationReport rep = validate_relative(M.graph, M.rel);
  if (!rep.valid) throw std::logic_error("standard model failed validation: " + rep.message);
  return M;
}

namespace {

std::string unique_name(std::vector<std::string>& pool, std::string base) {
  std::string name = base;
  while (std::find(pool.begin(), pool.end(), name) != pool.end()) name += "'";
  pool.push_back(name);
  return name;
}

}  // namespace

SubdivisionResult subdivide_edge(const RibbonGraph& G, const RelativeSubgraph& A, int e) {
  if (e < 0 || e >= G.num_edges()) throw std::invalid_argument("edge id out of range");
  SubdivisionResult R;
  R.graph = G;
  R.rel = A;
  int w = R.graph.num_vertices();
  int ne = R.graph.num_edges();
  R.new_vertex = w;
  R.new_edge = ne;

  int to = G.edge_ends[e].second;
  R.graph.edge_ends[e].second = w;        // e now runs from -> w
  R.graph.edge_ends.push_back({w, to});   // new edge runs w -> to

  std::vector<std::string> vpool = R.graph.vertex_names;
  R.graph.vertex_names.push_back(unique_name(vpool, G.edge_names[e] + "_mid"));
  std::vector<std::string> epool = R.graph.edge_names;
  R.graph.edge_names.push_back(unique_name(epool, G.edge_names[e] + "'"));

  // the head half of e moves to the new vertex; its old position at `to` is
  // taken by the head half of the new edge
  for (int& h : R.graph.order[to])
    if (h == RibbonGraph::head_half(e)) h = RibbonGraph::head_half(ne);
  R.graph.order.push_back({RibbonGraph::head_half(e), RibbonGraph::tail_half(ne)});
  R.graph.validate();

  for (auto& comp : R.rel.components) {
    std::vector<std::pair<int, int>> steps;
    for (const auto& [ce, cd] : comp.steps) {
      if (ce != e) {
        steps.push_back({ce, cd});
      } else if (cd > 0) {
        steps.push_back({e, +1});
        steps.push_back({ne, +1});
      } else {
        steps.push_back({ne, -1});
        steps.push_back({e, -1});
      }
    }
    comp.steps = std::move(steps);
  }
  return R;
}

SubdivisionResult subdivide_all_edges(const RibbonGraph& G, const RelativeSubgraph& A) {
  SubdivisionResult R;
  R.graph = G;
  R.rel = A;
  int original = G.num_edges();
  for (int e = 0; e < original; ++e) {
    SubdivisionResult step = subdivide_edge(R.graph, R.rel, e);
    R.graph = std::move(step.graph);
    R.rel = std::move(step.rel);
  }
  return R;
}

RibbonGraph random_connected_graph(std::uint64_t seed, int max_edges) {
  if (max_edges < 1) throw std::invalid_argument("max_edges must be >= 1");
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + (int)(rng() % (std::uint64_t)(hi - lo + 1));
  };
  int V = pick(1, std::min(4, max_edges + 1));
  int E = pick(std::max(1, V - 1), max_edges);

  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < V; ++v) {
    int u = pick(0, v - 1);
    if (pick(0, 1)) edges.push_back({u, v});
    else edges.push_back({v, u});
  }
  while ((int)edges.size() < E) edges.push_back({pick(0, V - 1), pick(0, V - 1)});

  std::vector<std::vector<int>> order(V);
  for (int e = 0; e < (int)edges.size(); ++e) {
    order[edges[e].first].push_back(RibbonGraph::tail_half(e));
    order[edges[e].second].push_back(RibbonGraph::head_half(e));
  }
  for (auto& cyc : order) std::shuffle(cyc.begin(), cyc.end(), rng);
  return make_graph(V, edges, order);
}

}  // namespace heishom
