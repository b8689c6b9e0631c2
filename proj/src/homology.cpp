#include "heishom/homology.hpp"

#include <stdexcept>
#include <utility>

namespace heishom {

ScalarSpec default_scalar(const SurfaceParams& P, int epsilon) {
  ScalarSpec S;
  S.epsilon = epsilon;
  S.slot_values.assign(P.h1_rank(), Rational(1));
  return S;
}

static void check_scalar(const SurfaceParams& P, const ScalarSpec& S) {
  if (S.epsilon != 1 && S.epsilon != -1)
    throw std::invalid_argument("central value must be +1 or -1");
  if ((int)S.slot_values.size() != P.h1_rank())
    throw std::invalid_argument("scalar specialization has wrong number of slot values");
  for (const Rational& v : S.slot_values)
    if (v == 0) throw std::invalid_argument("scalar slot values must be nonzero");
}

static Rational rat_pow(const Rational& base, long long e) {
  Rational b = base;
  long long n = e;
  if (n < 0) {
    b = Rational(1) / b;
    n = -n;
  }
  Rational out(1);
  while (n > 0) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

Rational scalar_value(const SurfaceParams& P, const ScalarSpec& S, const HeisenbergElement& h) {
  check_scalar(P, S);
  Rational out(1);
  if (S.epsilon == -1 && (h.k % 2 != 0)) out = -out;
  for (int s = 0; s < P.h1_rank(); ++s) {
    if (h.x[s] == 0) continue;
    out *= rat_pow(S.slot_values[s], h.x[s].convert_to<long long>());
  }
  return out;
}

IntMatrix trivial_matrix(const BMComplex& C, int k) {
  int rows = (int)C.cells[k].size();
  int cols = (int)C.cells[k - 1].size();
  IntMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (const auto& [j, val] : C.boundary[k][i]) {
      Int total = 0;
      for (const auto& [h, c] : val.terms) {
        (void)h;
        total += c;
      }
      M.at(i, j) = total;
    }
  }
  return M;
}

RatMatrix scalar_matrix(const BMComplex& C, int k, const ScalarSpec& S) {
  check_scalar(C.coeff_params, S);
  int rows = (int)C.cells[k].size();
  int cols = (int)C.cells[k - 1].size();
  RatMatrix M = RatMatrix::zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (const auto& [j, val] : C.boundary[k][i]) {
      Rational total(0);
      for (const auto& [h, c] : val.terms)
        total += Rational(c) * scalar_value(C.coeff_params, S, h);
      M.at(i, j) = total;
    }
  }
  return M;
}

IntMatrix linearized_matrix(const BMComplex& C, int k) {
  int blk = C.coeff_params.h1_rank() + 2;
  int rows = (int)C.cells[k].size();
  int cols = (int)C.cells[k - 1].size();
  IntMatrix M(rows * blk, cols * blk);
  for (int i = 0; i < rows; ++i) {
    for (const auto& [j, val] : C.boundary[k][i]) {
      for (const auto& [h, c] : val.terms) {
        IntMatrix R = linearized_rep(C.coeff_params, h);
        for (int r = 0; r < blk; ++r)
          for (int s = 0; s < blk; ++s)
            if (R.at(r, s) != 0) M.at(i * blk + r, j * blk + s) += c * R.at(r, s);
      }
    }
  }
  return M;
}

static Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

SmithResult smith_normal_form(IntMatrix M0) {
  int R = M0.rows, C = M0.cols;
  std::vector<std::vector<Int>> M(R, std::vector<Int>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) M[i][j] = M0.at(i, j);

  SmithResult out;
  int t = 0;
  while (t < R && t < C) {
    // smallest nonzero entry of the trailing submatrix becomes the pivot
    int pr = -1, pc = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j)
        if (M[i][j] != 0 && (pr < 0 || int_abs(M[i][j]) < int_abs(M[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(M[t], M[pr]);
    if (pc != t)
      for (int i = 0; i < R; ++i) std::swap(M[i][t], M[i][pc]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < R; ++i) {
        if (M[i][t] == 0) continue;
        Int q = M[i][t] / M[t][t];
        for (int j = t; j < C; ++j) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) {  // remainder strictly smaller: promote it
          std::swap(M[t], M[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < C; ++j) {
        if (M[t][j] == 0) continue;
        Int q = M[t][j] / M[t][t];
        for (int i = t; i < R; ++i) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) {
          for (int i = 0; i < R; ++i) std::swap(M[i][t], M[i][j]);
          dirty = true;
        }
      }
      if (!dirty) {
        // enforce divisibility of every later entry by the pivot
        for (int i = t + 1; i < R && !dirty; ++i)
          for (int j = t + 1; j < C && !dirty; ++j)
            if (M[i][j] % M[t][t] != 0) {
              for (int jj = t; jj < C; ++jj) M[t][jj] += M[i][jj];
              dirty = true;
            }
      }
    }
    if (M[t][t] < 0) M[t][t] = -M[t][t];
    out.factors.push_back(M[t][t]);
    ++t;
  }
  out.rank = (int)out.factors.size();
  return out;
}

int rational_rank(RatMatrix M) {
  int R = M.rows, C = M.cols;
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int pivot = -1;
    for (int i = rank; i < R; ++i)
      if (M.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < C; ++j) std::swap(M.at(rank, j), M.at(pivot, j));
    Rational inv = Rational(1) / M.at(rank, col);
    for (int j = col; j < C; ++j) M.at(rank, j) *= inv;
    for (int i = 0; i < R; ++i) {
      if (i == rank || M.at(i, col) == 0) continue;
      Rational f = M.at(i, col);
      for (int j = col; j < C; ++j) M.at(i, j) -= f * M.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

HomologySummary bm_homology(const BMComplex& C, const Specialization& S) {
  HomologySummary out;
  int n = C.n;
  out.unit = S.kind == SpecKind::Linearized ? C.coeff_params.h1_rank() + 2 : 1;
  out.over_field = S.kind == SpecKind::Scalar;
  out.chain_ranks.resize(n + 1);
  for (int k = 0; k <= n; ++k) out.chain_ranks[k] = (int)C.cells[k].size() * out.unit;

  std::vector<int> rank(n + 2, 0);
  std::vector<SmithResult> smith(n + 1);
  for (int k = 1; k <= n; ++k) {
    switch (S.kind) {
      case SpecKind::TrivialInt: smith[k] = smith_normal_form(trivial_matrix(C, k)); break;
      case SpecKind::Linearized: smith[k] = smith_normal_form(linearized_matrix(C, k)); break;
      case SpecKind::Scalar: {
        SmithResult r;
        r.rank = rational_rank(scalar_matrix(C, k, S.scalar));
        smith[k] = r;
        break;
      }
    }
    rank[k] = smith[k].rank;
  }

  out.groups.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    out.groups[k].free_rank = out.chain_ranks[k] - rank[k] - rank[k + 1];
    if (!out.over_field && k + 1 <= n) {
      for (const Int& d : smith[k + 1].factors)
        if (d > 1) out.groups[k].torsion.push_back(d);
    }
  }
  return out;
}

ConcentrationReport concentration_report(const BMComplex& C) {
  ConcentrationReport rep;
  int used_degree = -1;
  for (int k = 0; k <= C.n; ++k) {
    if (C.cells[k].empty()) continue;
    if (used_degree >= 0) return rep;  // more than one occupied degree
    used_degree = k;
  }
  if (used_degree < 0) {
    rep.concentrated = true;
    rep.degree = -1;
    rep.free_rank = 0;
    return rep;
  }
  for (int k = 1; k <= C.n; ++k)
    for (const auto& row : C.boundary[k])
      if (!row.empty()) return rep;
  rep.concentrated = true;
  rep.degree = used_degree;
  rep.free_rank = (int)C.cells[used_degree].size();
  return rep;
}

}  // namespace heishom
