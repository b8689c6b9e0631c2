#include "heishom/render.hpp"

namespace heishom {

static void append_factor(std::string& s, const std::string& name, const Int& e) {
  if (e == 0) return;
  if (!s.empty()) s += "·";
  s += name;
  if (e != 1) s += "^" + e.str();
}

std::string render_monomial(const SurfaceParams& P, const HeisenbergElement& h) {
  std::string s;
  append_factor(s, "u", normal_u_exponent(P, h));
  for (int r = 1; r <= P.g; ++r) {
    append_factor(s, slot_name(P, slot_a(P, r)), h.x[slot_a(P, r)]);
    append_factor(s, slot_name(P, slot_b(P, r)), h.x[slot_b(P, r)]);
  }
  for (int t = 1; t <= P.m - 1; ++t)
    append_factor(s, slot_name(P, slot_c(P, t)), h.x[slot_c(P, t)]);
  return s.empty() ? "1" : s;
}

std::string render_group_ring(const GroupRingElement& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [h, c] : p.terms) {
    bool neg = c < 0;
    Int mag = c;
    if (neg) mag = -mag;
    std::string mono = render_monomial(p.params, h);
    std::string body;
    if (mag == 1)
      body = mono;
    else if (mono == "1")
      body = mag.str();
    else
      body = mag.str() + "·" + mono;
    if (first) {
      if (neg) out += "-";
      out += body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace heishom
