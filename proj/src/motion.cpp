#include <algorithm>
#include <stdexcept>

#include "heishom/config_complex.hpp"

// Motion calculus for the standard wedge models.  The base configuration
// lies in the interior of the base edge A, indexed from the v0 side.  A
// moving point emits one central letter per parked point it passes on A
// (positive exponent when heading toward v1) and one surface letter per
// tail-seam crossing of a loop edge; head-seam crossings are silent, and
// motion inside a band never crosses parked points because entries park
// deepest-first while exits peel an end point off either end.

namespace heishom {

namespace {

BraidGenerator seam_letter(const BMComplex& C, int edge, int exp) {
  int slot = C.edge_slot[edge];
  const SurfaceParams& P = C.coeff_params;
  if (slot < P.g) return {GenKind::Alpha, slot + 1, exp};
  if (slot < 2 * P.g) return {GenKind::Beta, slot - P.g + 1, exp};
  return {GenKind::Gamma, slot - 2 * P.g + 1, exp};
}

void emit_passes(BraidWord& w, int count, int sign) {
  for (int i = 0; i < count; ++i) w.push_back({GenKind::Sigma, 1, sign});
}

void require_wedge(const BMComplex& C) {
  if (C.oracle != OracleKind::StandardWedge)
    throw std::logic_error("tether words are defined only for standard wedge complexes");
}

}  // namespace

BraidWord cell_tether(const BMComplex& C, const ConfigCell& cell) {
  require_wedge(C);
  if (cell.points() != C.n) throw std::invalid_argument("cell has wrong number of points");
  BraidWord w;
  int j = 0;  // index of the departing point, counted from the v0 side
  bool at_v0 = std::binary_search(cell.vertices.begin(), cell.vertices.end(), 0);
  bool at_v1 = std::binary_search(cell.vertices.begin(), cell.vertices.end(), 1);
  if (at_v0) ++j;  // moves toward v0 over vacated slots: silent
  for (int e = 1; e < C.graph.num_edges(); ++e) {
    for (int r = 0; r < cell.edge_counts[e]; ++r) {
      ++j;
      emit_passes(w, C.n - j, C.profile.pass_sign);
      w.push_back(seam_letter(C, e, 1));
    }
  }
  if (at_v1) {
    ++j;
    emit_passes(w, C.n - j, C.profile.pass_sign);
  }
  // Points parked inside A move toward v0 over vacated slots: silent.
  return w;
}

BraidWord exit_word(const BMComplex& C, const ExitMove& mv) {
  require_wedge(C);
  BraidWord w;
  if (mv.edge != 0 && !mv.at_head) w.push_back(seam_letter(C, mv.edge, -1));
  return w;
}

HeisenbergElement deck_coefficient(const BMComplex& C, const ConfigCell& E, const ExitMove& mv,
                                   const ConfigCell& F) {
  require_wedge(C);
  ConfigCell check;
  if (!apply_exit(C, E, mv, check) || !(check == F))
    throw std::invalid_argument("cell is not the face of the given exit");
  BraidWord loop = cell_tether(C, E);
  BraidWord mid = exit_word(C, mv);
  loop.insert(loop.end(), mid.begin(), mid.end());
  BraidWord back = word_inverse(cell_tether(C, F));
  loop.insert(loop.end(), back.begin(), back.end());
  HeisenbergElement h = phi_eval(loop, C.coeff_params, C.n);
  if (C.profile.deck_inverse) h = h_inv(h);
  return h;
}

HeisenbergElement deck_coefficient(const BMComplex& C, const ConfigCell& E, const ConfigCell& F) {
  require_wedge(C);
  bool found = false;
  ExitMove chosen;
  for (int e = 0; e < C.graph.num_edges(); ++e) {
    if (E.edge_counts[e] == 0) continue;
    for (bool at_head : {true, false}) {
      ExitMove mv{e, at_head};
      ConfigCell out;
      if (apply_exit(C, E, mv, out) && out == F) {
        if (found) throw std::invalid_argument("two distinct exits reach the same face");
        found = true;
        chosen = mv;
      }
    }
  }
  if (!found) throw std::invalid_argument("cell is not a codimension-one face");
  return deck_coefficient(C, E, chosen, F);
}

}  // namespace heishom
