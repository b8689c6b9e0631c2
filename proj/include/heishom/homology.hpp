#pragma once

#include <vector>

#include "heishom/config_complex.hpp"
#include "heishom/linearized.hpp"

namespace heishom {

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  static RatMatrix zero(int r, int c) {
    RatMatrix m;
    m.rows = r;
    m.cols = c;
    m.a.assign((size_t)r * c, Rational(0));
    return m;
  }
  Rational& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Rational& at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

// One-dimensional specialization over Q: the central element maps to
// epsilon (+1 or -1, forced by the commutation relations) and the homology
// basis slot s maps to the nonzero rational slot_values[s].
struct ScalarSpec {
  int epsilon = 1;
  std::vector<Rational> slot_values;
};

ScalarSpec default_scalar(const SurfaceParams& P, int epsilon = 1);
Rational scalar_value(const SurfaceParams& P, const ScalarSpec& S, const HeisenbergElement& h);

enum class SpecKind { TrivialInt, Scalar, Linearized };

struct Specialization {
  SpecKind kind = SpecKind::TrivialInt;
  ScalarSpec scalar;  // used when kind == Scalar
};

// Specialized boundary matrix in degree k, rows = k-cells (times the block
// size), columns = (k-1)-cells.
IntMatrix trivial_matrix(const BMComplex& C, int k);
RatMatrix scalar_matrix(const BMComplex& C, int k, const ScalarSpec& S);
IntMatrix linearized_matrix(const BMComplex& C, int k);

struct SmithResult {
  std::vector<Int> factors;  // nonzero invariant factors, ascending divisibility
  int rank = 0;
};
SmithResult smith_normal_form(IntMatrix M);
int rational_rank(RatMatrix M);

struct DegreeHomology {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

struct HomologySummary {
  int unit = 1;                  // block size of the specialization
  std::vector<int> chain_ranks;  // per degree, in specialized coordinates
  std::vector<DegreeHomology> groups;
  bool over_field = false;  // true for scalar: no integral torsion computed
};

HomologySummary bm_homology(const BMComplex& C, const Specialization& S);

// Structure over the full group ring: when every cell sits in one degree and
// all boundary matrices vanish, the homology is free in that degree.
struct ConcentrationReport {
  bool concentrated = false;
  int degree = -1;
  int free_rank = 0;
};

ConcentrationReport concentration_report(const BMComplex& C);

}  // namespace heishom
