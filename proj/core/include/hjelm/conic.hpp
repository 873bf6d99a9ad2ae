#pragma once

#include <array>
#include <string>
#include <vector>

#include "hjelm/plane.hpp"

namespace hjelm {

/// Quadric in the plane: sum_{i<=j} c_ij x_i x_j = 0 with coefficient order
/// (c11, c22, c33, c12, c13, c23) and at least one unit coefficient.
struct Conic {
  RingPtr ring;
  std::array<int, 6> coeffs{}; // element indices
  std::string label;

  /// x1*x3 - x2^2 = 0, the canonical proper conic.
  static Conic canonical(RingPtr ring);
  /// Validates the unit-coefficient requirement. Values are constants,
  /// embedded via Ring::from_int (negative values allowed).
  static Conic from_constants(RingPtr ring, const std::array<long, 6>& constants,
                              std::string label = {});
  static Conic from_elements(RingPtr ring, const std::array<Elem, 6>& elements,
                             std::string label = {});

  Elem evaluate(const Triple& point) const;
};

/// Exact solution set of the conic equation over the canonical points,
/// ascending point indices.
std::vector<int> conic_points(const Conic& conic, const Plane& plane);

/// The two charts covering the canonical conic: (1, t, t^2) for every ring
/// element t, and (0, z, 1) for every zero divisor z.
struct ConicCharts {
  std::vector<Triple> affine;
  std::vector<Triple> at_infinity;
};
ConicCharts canonical_conic_charts(const Ring& ring);

/// Neighbour-class decomposition of a conic: q+1 traces of q points each
/// whose images form a nondegenerate conic image downstairs. Throws
/// NotAProperConic when the point set has no such structure.
struct ConicClassDecomposition {
  std::vector<NeighbourClass> classes; // first-occurrence order
  std::vector<int> classical_image;    // residue-plane point indices, per class
};
ConicClassDecomposition conic_neighbour_classes(const Conic& conic, const Plane& plane);

enum class Properness { Proper, Improper, Unknown };
const char* to_string(Properness v);

/// Proper = no invertible coordinate transformation eliminates a variable.
/// Exact decision for q = 2 by exhausting GL(3,R); for larger q the verdict
/// falls back to the structural signature: a failing signature certifies
/// Improper, the canonical form (up to unit scaling) is recognized Proper,
/// anything else is honestly Unknown.
Properness is_proper(const Conic& conic, const Plane& plane);

/// Five reference proper conics (labels carry the defining equations).
std::vector<Conic> reference_conics(RingPtr ring);

struct ConicIntersections {
  std::vector<Conic> conics;
  std::vector<std::vector<int>> points;   // per conic, ascending
  std::vector<Properness> verdicts;       // per conic
  struct Pair {
    int a = 0, b = 0;
    std::vector<int> common; // ascending point indices
  };
  std::vector<Pair> pairs; // (0,1), (0,2), ... deterministic order
};

// Pairwise common-point report; exact set intersection of the solution sets.
ConicIntersections conic_pairwise_intersections(const std::vector<Conic>& conics,
                                                const Plane& plane);

} // namespace hjelm
