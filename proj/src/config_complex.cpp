#include "heishom/config_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace heishom {

std::string render_cell(const RibbonGraph& G, const ConfigCell& c) {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += "x";
    s += part;
  };
  for (int v : c.vertices) append(G.vertex_names[v]);
  for (int e = 0; e < (int)c.edge_counts.size(); ++e) {
    int k = c.edge_counts[e];
    if (k == 0) continue;
    if (k == 1) {
      append(G.edge_names[e]);
    } else {
      append("C" + std::to_string(k) + "(" + G.edge_names[e] + ")");
    }
  }
  if (s.empty()) s = "{}";
  return s;
}

static void fill_allowed(BMComplex& C) {
  C.vert_ok.assign(C.graph.num_vertices(), 1);
  C.edge_ok.assign(C.graph.num_edges(), 1);
  if (C.relative) {
    auto vm = C.rel.vertex_mask(C.graph);
    auto em = C.rel.edge_mask(C.graph);
    for (int v = 0; v < C.graph.num_vertices(); ++v)
      if (vm[v]) C.vert_ok[v] = 0;
    for (int e = 0; e < C.graph.num_edges(); ++e)
      if (em[e]) C.edge_ok[e] = 0;
  }
}

int BMComplex::cell_index(int dim, const ConfigCell& c) const {
  if (dim < 0 || dim >= (int)cells.size()) return -1;
  const auto& bucket = cells[dim];
  auto it = std::lower_bound(bucket.begin(), bucket.end(), c);
  if (it == bucket.end() || !(*it == c)) return -1;
  return (int)(it - bucket.begin());
}

std::vector<std::vector<ConfigCell>> enumerate_cells(const RibbonGraph& G,
                                                     const RelativeSubgraph& A, bool relative,
                                                     int n) {
  if (n < 1) throw std::invalid_argument("number of points must be at least 1");
  std::vector<char> vmask(G.num_vertices(), 0), emask(G.num_edges(), 0);
  if (relative) {
    vmask = A.vertex_mask(G);
    emask = A.edge_mask(G);
  }
  std::vector<int> vert_ok, edge_ok;
  for (int v = 0; v < G.num_vertices(); ++v)
    if (!vmask[v]) vert_ok.push_back(v);
  for (int e = 0; e < G.num_edges(); ++e)
    if (!emask[e]) edge_ok.push_back(e);

  std::vector<std::vector<ConfigCell>> out(n + 1);
  // Choose the occupied vertex subset, then spread the rest over the edges.
  std::vector<int> chosen;
  auto spread = [&](auto&& self, int pos, int remaining, std::vector<int>& counts) -> void {
    if (pos == (int)edge_ok.size()) {
      if (remaining != 0) return;
      ConfigCell c;
      c.vertices = chosen;
      c.edge_counts.assign(G.num_edges(), 0);
      for (int i = 0; i < (int)edge_ok.size(); ++i) c.edge_counts[edge_ok[i]] = counts[i];
      out[c.dim()].push_back(std::move(c));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      counts[pos] = k;
      self(self, pos + 1, remaining - k, counts);
    }
    counts[pos] = 0;
  };
  auto pick = [&](auto&& self, int pos, int remaining) -> void {
    if (remaining == 0 || pos == (int)vert_ok.size()) {
      std::vector<int> counts(edge_ok.size(), 0);
      spread(spread, 0, remaining, counts);
      return;
    }
    chosen.push_back(vert_ok[pos]);
    self(self, pos + 1, remaining - 1);
    chosen.pop_back();
    self(self, pos + 1, remaining);
  };
  pick(pick, 0, n);
  for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
  return out;
}

int incidence_sign(const ConfigCell& E, const ExitMove& mv) {
  int prefix = 0;
  for (int e = 0; e < mv.edge; ++e) prefix += E.edge_counts[e];
  int sign = (prefix % 2 == 0) ? 1 : -1;
  if (mv.at_head) {
    int k = E.edge_counts[mv.edge];
    if ((k - 1) % 2 != 0) sign = -sign;
  } else {
    sign = -sign;
  }
  return sign;
}

bool apply_exit(const BMComplex& C, const ConfigCell& E, const ExitMove& mv, ConfigCell& out) {
  const auto [tail_v, head_v] = C.graph.edge_ends[mv.edge];
  int target = mv.at_head ? head_v : tail_v;
  if (!C.vert_ok[target]) return false;
  if (std::binary_search(E.vertices.begin(), E.vertices.end(), target)) return false;
  out = E;
  out.edge_counts[mv.edge] -= 1;
  out.vertices.insert(std::upper_bound(out.vertices.begin(), out.vertices.end(), target), target);
  return true;
}

static GroupRingElement entry_coefficient(const BMComplex& C, const ConfigCell& E,
                                          const ExitMove& mv, const ConfigCell& F) {
  if (C.oracle == OracleKind::Trivial) return GroupRingElement::one(C.coeff_params);
  return GroupRingElement::monomial(C.coeff_params, deck_coefficient(C, E, mv, F));
}

static void build_boundaries(BMComplex& C) {
  C.boundary.assign(C.n + 1, GrMatrix{});
  for (int k = 1; k <= C.n; ++k) {
    const auto& sources = C.cells[k];
    C.boundary[k].assign(sources.size(), std::map<int, GroupRingElement>{});
    for (int i = 0; i < (int)sources.size(); ++i) {
      const ConfigCell& E = sources[i];
      for (int e = 0; e < C.graph.num_edges(); ++e) {
        if (E.edge_counts[e] == 0) continue;
        for (bool at_head : {true, false}) {
          ExitMove mv{e, at_head};
          ConfigCell F;
          if (!apply_exit(C, E, mv, F)) continue;
          int col = C.cell_index(k - 1, F);
          if (col < 0) throw std::logic_error("face cell missing from enumeration");
          GroupRingElement term =
              gr_scale(entry_coefficient(C, E, mv, F), Int(incidence_sign(E, mv)));
          auto it = C.boundary[k][i].find(col);
          if (it == C.boundary[k][i].end()) {
            C.boundary[k][i].emplace(col, std::move(term));
          } else {
            it->second = gr_add(it->second, term);
            if (it->second.terms.empty()) C.boundary[k][i].erase(it);
          }
        }
      }
    }
  }
}

BMComplex build_trivial_complex(const RibbonGraph& G, const RelativeSubgraph& A, bool relative,
                                int n) {
  G.validate();
  if (relative) validate_relative(G, A);
  BMComplex C;
  C.graph = G;
  C.rel = A;
  C.relative = relative;
  C.n = n;
  C.oracle = OracleKind::Trivial;
  C.coeff_params = SurfaceParams{0, 1};
  fill_allowed(C);
  C.cells = enumerate_cells(G, A, relative, n);
  build_boundaries(C);
  return C;
}

BMComplex build_wedge_complex(const StandardModel& M, bool relative, int n,
                              const CalibrationProfile& profile) {
  BMComplex C;
  C.graph = M.graph;
  C.rel = M.rel;
  C.relative = relative;
  C.n = n;
  C.oracle = OracleKind::StandardWedge;
  C.coeff_params = M.params;
  C.edge_slot = M.edge_slot;
  C.profile = profile;
  fill_allowed(C);
  C.cells = enumerate_cells(M.graph, M.rel, relative, n);
  build_boundaries(C);
  return C;
}

bool boundary_squares_to_zero(const BMComplex& C) {
  for (int k = 2; k <= C.n; ++k) {
    const GrMatrix& top = C.boundary[k];
    const GrMatrix& bot = C.boundary[k - 1];
    for (const auto& row : top) {
      std::map<int, GroupRingElement> acc;
      for (const auto& [mid, coeff] : row) {
        for (const auto& [col, coeff2] : bot[mid]) {
          GroupRingElement prod = gr_mul(coeff, coeff2);
          auto it = acc.find(col);
          if (it == acc.end()) {
            acc.emplace(col, std::move(prod));
          } else {
            it->second = gr_add(it->second, prod);
          }
        }
      }
      for (const auto& [col, value] : acc) {
        (void)col;
        if (!value.terms.empty()) return false;
      }
    }
  }
  return true;
}

}  // namespace heishom
