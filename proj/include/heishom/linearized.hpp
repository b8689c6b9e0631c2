#pragma once

#include <vector>

#include "heishom/heisenberg.hpp"

namespace heishom {

// Dense matrix of arbitrary-precision integers, row major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, Int(0)) {}

  Int& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Int& at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static IntMatrix identity(int n);

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);

// The linearization of the left-translation action of (k0,x0) on the group,
// acting on column vectors (k, x, t) of size 1 + h1_rank + 1:
//   k |-> k + (x0.J x) + k0 t,  x |-> x + x0 t,  t |-> t.
using LinearizedRepMatrix = IntMatrix;

LinearizedRepMatrix linearized_rep(const SurfaceParams& P, const HeisenbergElement& h);

}  // namespace heishom
