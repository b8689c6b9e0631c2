#pragma once

#include <string>
#include <vector>

#include "heishom/ints.hpp"

namespace heishom {

// Compact oriented surface of genus g with m boundary components.
struct SurfaceParams {
  int g = 0;
  int m = 1;

  int h1_rank() const { return 2 * g + m - 1; }

  bool operator==(const SurfaceParams& o) const { return g == o.g && m == o.m; }
  bool operator!=(const SurfaceParams& o) const { return !(*this == o); }
};

// Class in H_1 of the surface, written in the ordered basis
// (a_1..a_g, b_1..b_g, c_1..c_{m-1}).  Slot layout:
//   0..g-1      a_r  (r = slot+1)
//   g..2g-1     b_s  (s = slot-g+1)
//   2g..2g+m-2  c_t  (t = slot-2g+1)
using H1Vector = std::vector<Int>;

H1Vector h1_zero(const SurfaceParams& P);
H1Vector h1_unit(const SurfaceParams& P, int slot);
int slot_a(const SurfaceParams& P, int r);
int slot_b(const SurfaceParams& P, int s);
int slot_c(const SurfaceParams& P, int t);
std::string slot_name(const SurfaceParams& P, int slot);

H1Vector h1_add(const H1Vector& x, const H1Vector& y);
H1Vector h1_sub(const H1Vector& x, const H1Vector& y);
H1Vector h1_neg(const H1Vector& x);
bool h1_is_zero(const H1Vector& x);

// Standard symplectic-with-radical pairing: a_r.b_r = +1, b_r.a_r = -1,
// all other basis pairings vanish (the c_t span the radical).
Int intersection_form(const SurfaceParams& P, const H1Vector& x, const H1Vector& y);
std::vector<std::vector<Int>> intersection_matrix(const SurfaceParams& P);

// Element (k, x) of the discrete Heisenberg group of the surface:
// the central extension of H_1 by Z with cocycle the intersection form.
struct HeisenbergElement {
  Int k;
  H1Vector x;

  bool operator==(const HeisenbergElement& o) const { return k == o.k && x == o.x; }
  bool operator!=(const HeisenbergElement& o) const { return !(*this == o); }
};

HeisenbergElement h_identity(const SurfaceParams& P);
HeisenbergElement h_u(const SurfaceParams& P, const Int& power = 1);
// (0, power * basis-vector of the given slot)
HeisenbergElement h_gen(const SurfaceParams& P, int slot, const Int& power = 1);

// (k,x)(l,y) = (k + l + x.y, x + y)
HeisenbergElement h_mul(const SurfaceParams& P, const HeisenbergElement& a,
                        const HeisenbergElement& b);
HeisenbergElement h_inv(const HeisenbergElement& a);

// Exponent K in the normal form u^K a1^{p1} b1^{q1} a2^{p2} ... c1 ... :
// K = k - sum_r p_r q_r, chosen so the written ordered product equals (k,x).
Int normal_u_exponent(const SurfaceParams& P, const HeisenbergElement& h);

// Canonical term order for sums: x lexicographically ascending, then k
// descending (equivalently normal-form u-exponent descending within fixed x).
struct TermOrder {
  bool operator()(const HeisenbergElement& a, const HeisenbergElement& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.k > b.k;
  }
};

}  // namespace heishom
