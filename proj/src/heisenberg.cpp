#include "heishom/heisenberg.hpp"

#include <stdexcept>

namespace heishom {

static void check_params(const SurfaceParams& P) {
  if (P.g < 0 || P.m < 1) throw std::invalid_argument("surface requires g >= 0 and m >= 1");
}

H1Vector h1_zero(const SurfaceParams& P) {
  check_params(P);
  return H1Vector(P.h1_rank(), Int(0));
}

H1Vector h1_unit(const SurfaceParams& P, int slot) {
  H1Vector v = h1_zero(P);
  if (slot < 0 || slot >= P.h1_rank()) throw std::invalid_argument("basis slot out of range");
  v[slot] = 1;
  return v;
}

int slot_a(const SurfaceParams& P, int r) {
  if (r < 1 || r > P.g) throw std::invalid_argument("a-index out of range");
  return r - 1;
}

int slot_b(const SurfaceParams& P, int s) {
  if (s < 1 || s > P.g) throw std::invalid_argument("b-index out of range");
  return P.g + s - 1;
}

int slot_c(const SurfaceParams& P, int t) {
  if (t < 1 || t > P.m - 1) throw std::invalid_argument("c-index out of range");
  return 2 * P.g + t - 1;
}

std::string slot_name(const SurfaceParams& P, int slot) {
  if (slot < 0 || slot >= P.h1_rank()) throw std::invalid_argument("basis slot out of range");
  if (slot < P.g) return "a" + std::to_string(slot + 1);
  if (slot < 2 * P.g) return "b" + std::to_string(slot - P.g + 1);
  return "c" + std::to_string(slot - 2 * P.g + 1);
}

static void check_same_len(const H1Vector& x, const H1Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("H1 vector dimension mismatch");
}

H1Vector h1_add(const H1Vector& x, const H1Vector& y) {
  check_same_len(x, y);
  H1Vector z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

H1Vector h1_sub(const H1Vector& x, const H1Vector& y) {
  check_same_len(x, y);
  H1Vector z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

H1Vector h1_neg(const H1Vector& x) {
  H1Vector z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
  return z;
}

bool h1_is_zero(const H1Vector& x) {
  for (const Int& v : x)
    if (v != 0) return false;
  return true;
}

Int intersection_form(const SurfaceParams& P, const H1Vector& x, const H1Vector& y) {
  check_params(P);
  if ((int)x.size() != P.h1_rank() || (int)y.size() != P.h1_rank())
    throw std::invalid_argument("H1 vector dimension mismatch");
  Int s = 0;
  for (int r = 0; r < P.g; ++r) s += x[r] * y[P.g + r] - x[P.g + r] * y[r];
  return s;
}

std::vector<std::vector<Int>> intersection_matrix(const SurfaceParams& P) {
  check_params(P);
  int N = P.h1_rank();
  std::vector<std::vector<Int>> J(N, std::vector<Int>(N, Int(0)));
  for (int r = 0; r < P.g; ++r) {
    J[r][P.g + r] = 1;
    J[P.g + r][r] = -1;
  }
  return J;
}

HeisenbergElement h_identity(const SurfaceParams& P) { return {Int(0), h1_zero(P)}; }

HeisenbergElement h_u(const SurfaceParams& P, const Int& power) {
  return {power, h1_zero(P)};
}

HeisenbergElement h_gen(const SurfaceParams& P, int slot, const Int& power) {
  H1Vector v = h1_zero(P);
  if (slot < 0 || slot >= P.h1_rank()) throw std::invalid_argument("basis slot out of range");
  v[slot] = power;
  return {Int(0), v};
}

HeisenbergElement h_mul(const SurfaceParams& P, const HeisenbergElement& a,
                        const HeisenbergElement& b) {
  return {a.k + b.k + intersection_form(P, a.x, b.x), h1_add(a.x, b.x)};
}

HeisenbergElement h_inv(const HeisenbergElement& a) { return {-a.k, h1_neg(a.x)}; }

Int normal_u_exponent(const SurfaceParams& P, const HeisenbergElement& h) {
  if ((int)h.x.size() != P.h1_rank())
    throw std::invalid_argument("H1 vector dimension mismatch");
  Int delta = 0;
  for (int r = 0; r < P.g; ++r) delta += h.x[r] * h.x[P.g + r];
  return h.k - delta;
}

}  // namespace heishom
