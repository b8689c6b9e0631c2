#pragma once

#include <map>
#include <string>
#include <vector>

#include "heishom/braid.hpp"
#include "heishom/group_ring.hpp"
#include "heishom/ribbon_graph.hpp"

namespace heishom {

// Open cell of the discrete configuration space: a set of occupied vertices
// plus a count of points per edge interior.  dim = number of interior points.
struct ConfigCell {
  std::vector<int> vertices;     // occupied vertex ids, strictly increasing
  std::vector<int> edge_counts;  // size = number of edges

  int dim() const {
    int s = 0;
    for (int k : edge_counts) s += k;
    return s;
  }
  int points() const { return (int)vertices.size() + dim(); }

  bool operator==(const ConfigCell& o) const {
    return vertices == o.vertices && edge_counts == o.edge_counts;
  }
  bool operator<(const ConfigCell& o) const {
    if (vertices != o.vertices) return vertices < o.vertices;
    return edge_counts < o.edge_counts;
  }
};

std::string render_cell(const RibbonGraph& G, const ConfigCell& c);

// Sparse boundary matrix: row index = source cell, key = face cell index.
using GrMatrix = std::vector<std::map<int, GroupRingElement>>;

enum class OracleKind { Trivial, StandardWedge };

// Global conventions of the motion calculus that the theory pins only up to
// calibration; values are frozen by the quoted decomposition coefficients.
struct CalibrationProfile {
  int pass_sign = +1;         // u-exponent emitted per eastbound pass over a parked point
  bool deck_inverse = false;  // take the inverse of the tether-loop image
};

// One of the two endpoint faces of an edge factor.
struct ExitMove {
  int edge = -1;
  bool at_head = true;
};

struct BMComplex {
  RibbonGraph graph;
  RelativeSubgraph rel;
  bool relative = false;
  int n = 0;
  OracleKind oracle = OracleKind::Trivial;
  SurfaceParams coeff_params{0, 1};
  std::vector<int> edge_slot;  // StandardWedge: H1 slot per loop edge (-1 for A)
  CalibrationProfile profile;

  std::vector<char> vert_ok;  // sites available to configuration points
  std::vector<char> edge_ok;

  std::vector<std::vector<ConfigCell>> cells;  // graded by dimension 0..n
  std::vector<GrMatrix> boundary;              // boundary[k]: dim k -> dim k-1

  int cell_index(int dim, const ConfigCell& c) const;  // -1 when absent
};

std::vector<std::vector<ConfigCell>> enumerate_cells(const RibbonGraph& G,
                                                     const RelativeSubgraph& A, bool relative,
                                                     int n);

// Complex with every deck element specialized to the identity.
BMComplex build_trivial_complex(const RibbonGraph& G, const RelativeSubgraph& A, bool relative,
                                int n);

// Complex of a standard model with full Heisenberg deck coefficients.
BMComplex build_wedge_complex(const StandardModel& M, bool relative, int n,
                              const CalibrationProfile& profile = {});

// Braid word of the tether: points leave the base configuration in order,
// first point to the lowest site in the order (v0, band slots deep-to-shallow
// along e_1..e_N, v1, parked-in-A slots).
BraidWord cell_tether(const BMComplex& C, const ConfigCell& cell);

// Braid word emitted while one point performs the exit move (seam letters).
BraidWord exit_word(const BMComplex& C, const ExitMove& mv);

// Face cell reached by the exit move, or no value when the face is dropped
// (target vertex occupied / not allowed).
bool apply_exit(const BMComplex& C, const ConfigCell& E, const ExitMove& mv, ConfigCell& out);

// Deck element phi(tether_E . exit . tether_F^{-1}).
HeisenbergElement deck_coefficient(const BMComplex& C, const ConfigCell& E, const ExitMove& mv,
                                   const ConfigCell& F);
// Resolves the exit from the incident pair; throws when not a face or when
// two distinct exits yield the same face (loop edge).
HeisenbergElement deck_coefficient(const BMComplex& C, const ConfigCell& E, const ConfigCell& F);

// Incidence sign of the exit: (-1)^(sum of counts of earlier edges) times
// (-1)^(k_e - 1) at the head, -1 at the tail.
int incidence_sign(const ConfigCell& E, const ExitMove& mv);

bool boundary_squares_to_zero(const BMComplex& C);

}  // namespace heishom
