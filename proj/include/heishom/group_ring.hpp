#pragma once

#include <map>

#include "heishom/heisenberg.hpp"

namespace heishom {

// Element of the integral group ring Z[H]: finite formal sum of group
// elements with nonzero integer coefficients.  Terms are kept in the
// canonical TermOrder, which makes iteration (and rendering) deterministic.
struct GroupRingElement {
  SurfaceParams params;
  std::map<HeisenbergElement, Int, TermOrder> terms;

  static GroupRingElement zero(const SurfaceParams& P);
  static GroupRingElement one(const SurfaceParams& P);
  static GroupRingElement monomial(const SurfaceParams& P, const HeisenbergElement& h,
                                   const Int& coeff = 1);

  bool is_zero() const { return terms.empty(); }
  // stored coefficient of h (0 if absent)
  Int coeff(const HeisenbergElement& h) const;
  void add_term(const HeisenbergElement& h, const Int& coeff);

  bool operator==(const GroupRingElement& o) const {
    return params == o.params && terms == o.terms;
  }
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }
};

GroupRingElement gr_add(const GroupRingElement& p, const GroupRingElement& q);
GroupRingElement gr_sub(const GroupRingElement& p, const GroupRingElement& q);
GroupRingElement gr_neg(const GroupRingElement& p);
GroupRingElement gr_scale(const GroupRingElement& p, const Int& c);
// Convolution product; term order (p-term, q-term) multiplied left-to-right.
GroupRingElement gr_mul(const GroupRingElement& p, const GroupRingElement& q);

inline GroupRingElement operator+(const GroupRingElement& p, const GroupRingElement& q) {
  return gr_add(p, q);
}
inline GroupRingElement operator-(const GroupRingElement& p, const GroupRingElement& q) {
  return gr_sub(p, q);
}
inline GroupRingElement operator-(const GroupRingElement& p) { return gr_neg(p); }
inline GroupRingElement operator*(const GroupRingElement& p, const GroupRingElement& q) {
  return gr_mul(p, q);
}

}  // namespace heishom
