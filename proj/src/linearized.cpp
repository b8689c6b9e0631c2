#include "heishom/linearized.hpp"

#include <stdexcept>

namespace heishom {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) {
        const Int& bkj = B.at(k, j);
        if (bkj != 0) C.at(i, j) += aik * bkj;
      }
    }
  return C;
}

LinearizedRepMatrix linearized_rep(const SurfaceParams& P, const HeisenbergElement& h) {
  int N = P.h1_rank();
  if ((int)h.x.size() != N) throw std::invalid_argument("H1 vector dimension mismatch");
  IntMatrix M = IntMatrix::identity(N + 2);
  // row 0 = k-coordinate: picks up x0.J x plus k0 from the t-slot
  std::vector<std::vector<Int>> J = intersection_matrix(P);
  for (int j = 0; j < N; ++j) {
    Int v = 0;
    for (int i = 0; i < N; ++i) v += h.x[i] * J[i][j];
    M.at(0, 1 + j) = v;
  }
  M.at(0, N + 1) = h.k;
  // x-rows: translation by x0 via the t-slot
  for (int i = 0; i < N; ++i) M.at(1 + i, N + 1) = h.x[i];
  return M;
}

}  // namespace heishom
