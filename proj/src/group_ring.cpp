#include "heishom/group_ring.hpp"

#include <stdexcept>

namespace heishom {

GroupRingElement GroupRingElement::zero(const SurfaceParams& P) {
  GroupRingElement e;
  e.params = P;
  return e;
}

GroupRingElement GroupRingElement::one(const SurfaceParams& P) {
  return monomial(P, h_identity(P));
}

GroupRingElement GroupRingElement::monomial(const SurfaceParams& P, const HeisenbergElement& h,
                                            const Int& coeff) {
  GroupRingElement e;
  e.params = P;
  if ((int)h.x.size() != P.h1_rank())
    throw std::invalid_argument("H1 vector dimension mismatch");
  if (coeff != 0) e.terms.emplace(h, coeff);
  return e;
}

Int GroupRingElement::coeff(const HeisenbergElement& h) const {
  auto it = terms.find(h);
  return it == terms.end() ? Int(0) : it->second;
}

void GroupRingElement::add_term(const HeisenbergElement& h, const Int& coeff) {
  if ((int)h.x.size() != params.h1_rank())
    throw std::invalid_argument("H1 vector dimension mismatch");
  auto it = terms.find(h);
  if (it == terms.end()) {
    if (coeff != 0) terms.emplace(h, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

static void check_same_params(const GroupRingElement& p, const GroupRingElement& q) {
  if (p.params != q.params)
    throw std::invalid_argument("group ring elements over different surfaces");
}

GroupRingElement gr_add(const GroupRingElement& p, const GroupRingElement& q) {
  check_same_params(p, q);
  GroupRingElement r = p;
  for (const auto& [h, c] : q.terms) r.add_term(h, c);
  return r;
}

GroupRingElement gr_sub(const GroupRingElement& p, const GroupRingElement& q) {
  check_same_params(p, q);
  GroupRingElement r = p;
  for (const auto& [h, c] : q.terms) r.add_term(h, -c);
  return r;
}

GroupRingElement gr_neg(const GroupRingElement& p) {
  GroupRingElement r = GroupRingElement::zero(p.params);
  for (const auto& [h, c] : p.terms) r.terms.emplace(h, -c);
  return r;
}

GroupRingElement gr_scale(const GroupRingElement& p, const Int& c) {
  GroupRingElement r = GroupRingElement::zero(p.params);
  if (c == 0) return r;
  for (const auto& [h, a] : p.terms) r.terms.emplace(h, a * c);
  return r;
}

GroupRingElement gr_mul(const GroupRingElement& p, const GroupRingElement& q) {
  check_same_params(p, q);
  GroupRingElement r = GroupRingElement::zero(p.params);
  for (const auto& [hp, cp] : p.terms)
    for (const auto& [hq, cq] : q.terms) r.add_term(h_mul(p.params, hp, hq), cp * cq);
  return r;
}

}  // namespace heishom
