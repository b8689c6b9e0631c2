#pragma once

#include <string>

#include "heishom/group_ring.hpp"

namespace heishom {

// Normal-form monomial: u^K·a1^{p1}·b1^{q1}·a2^{p2}·...·c1^{...}, where
// K = normal_u_exponent(h); the ordered product of the printed factors equals
// (k,x).  Unit exponents are implicit, zero factors omitted, identity -> "1".
std::string render_monomial(const SurfaceParams& P, const HeisenbergElement& h);

// Signed sum of monomials in canonical term order, e.g. "-u + 1".
// The zero element renders as "0".
std::string render_group_ring(const GroupRingElement& p);

}  // namespace heishom
