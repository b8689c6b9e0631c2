#pragma once

#include <array>
#include <string>
#include <vector>

#include "heishom/braid.hpp"
#include "heishom/group_ring.hpp"
#include "heishom/linearized.hpp"

namespace heishom {

// Automorphism of the Heisenberg group fixing the center:
// (k, x) -> (k + d.x, M x), with M preserving the intersection pairing.
struct HeisenbergAutomorphism {
  SurfaceParams params;
  IntMatrix M;         // columns are images of basis vectors
  std::vector<Int> d;  // central offsets of the generator images
};

HeisenbergAutomorphism aut_identity(const SurfaceParams& P);
bool aut_preserves_form(const HeisenbergAutomorphism& t);
void aut_validate(const HeisenbergAutomorphism& t);  // throws std::invalid_argument

// The two core curves of the once-punctured torus model.
enum class TwistCurve { CurveA, CurveB };

// Right-handed Dehn twist along curve a (resp. b) acting on the Heisenberg
// group of the surface (1,1): a-twist fixes the a-generator and maps the
// b-generator to (-1, a+b); the b-twist maps the a-generator to (1, a-b).
HeisenbergAutomorphism aut_from_twist(TwistCurve c);

HeisenbergElement aut_apply(const HeisenbergAutomorphism& t, const HeisenbergElement& h);
GroupRingElement aut_apply(const HeisenbergAutomorphism& t, const GroupRingElement& p);
// composition: (a then-applied-after b), i.e. (a o b)
HeisenbergAutomorphism aut_compose(const HeisenbergAutomorphism& a,
                                   const HeisenbergAutomorphism& b);

// Matrix of tau x Id acting on column vectors (k, x, t).
IntMatrix intertwiner_matrix(const HeisenbergAutomorphism& t);

// Word in the two handle-core letters with implicit base-arc connectors,
// e.g. "bAa" for the curve running along beta, through A, then along alpha.
struct CurveLetter {
  GenKind kind = GenKind::Alpha;  // Alpha or Beta
  int exp = 1;                    // +1 or -1

  bool operator==(const CurveLetter& o) const { return kind == o.kind && exp == o.exp; }
};
using CurveWord = std::vector<CurveLetter>;

CurveWord curve_alpha();
CurveWord curve_beta();
void curve_validate(const CurveWord& c);  // nonempty, reduced, letters alpha/beta
std::string curve_to_string(const CurveWord& c);

// Letterwise rewriting by the twist: a-twist maps beta to bAa-style "beta A
// alpha"; b-twist maps alpha to "beta^-1 A alpha"; images of inverse letters
// are reversed inverses; the result is freely reduced.
CurveWord twist_image(TwistCurve T, const CurveWord& c);

// Coefficients on the homology basis (w(alpha), w(beta), v(alpha,beta)) of
// the two-point relative cycle supported on the given curve(s).
using BasisChain = std::array<GroupRingElement, 3>;

BasisChain decompose_w(const CurveWord& c);
BasisChain decompose_v(const CurveWord& c1, const CurveWord& c2);

struct TwistMatrix {
  SurfaceParams params{1, 1};
  std::array<std::array<GroupRingElement, 3>, 3> e;  // e[row][col]

  bool operator==(const TwistMatrix& o) const;
  bool operator!=(const TwistMatrix& o) const { return !(*this == o); }
};

TwistMatrix twist_matrix_identity();
TwistMatrix twist_matrix(TwistCurve T);
std::array<std::array<std::string, 3>, 3> render_twist_matrix(const TwistMatrix& M);

// M1 . tau1(M2): matrix product over the group ring with the left factor's
// accumulated automorphism applied to the right factor first.
TwistMatrix aut_apply(const HeisenbergAutomorphism& t, const TwistMatrix& M);
TwistMatrix twisted_mul(const TwistMatrix& M1, const HeisenbergAutomorphism& t1,
                        const TwistMatrix& M2);

// Twisted product expansion of a composition of twists, kept as the pair
// (matrix, accumulated automorphism) of the semidirect product law.
struct TwistedPair {
  TwistMatrix mat;
  HeisenbergAutomorphism aut;
};
TwistedPair twisted_pair(TwistCurve T);
TwistedPair twisted_pair_mul(const TwistedPair& x, const TwistedPair& y);
TwistedPair twisted_pair_power(const TwistedPair& x, int n);

struct IdentityReport {
  bool automorphisms_preserve_form = false;
  bool braid_identity = false;
  bool boundary_trivial_on_h1 = false;
  bool boundary_commutes_a = false;
  bool boundary_commutes_b = false;

  bool all_pass() const {
    return automorphisms_preserve_form && braid_identity && boundary_trivial_on_h1 &&
           boundary_commutes_a && boundary_commutes_b;
  }
};

IdentityReport verify_identities();

}  // namespace heishom
