#pragma once

#include <string>
#include <vector>

#include "hjelm/conic.hpp"
#include "hjelm/mub.hpp"

namespace hjelm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Audited structural bijection between a complete MUB set of C^q and the
/// neighbour-class decomposition of a proper conic: basis k maps to the k-th
/// class (deterministic first-occurrence order), vector j to the j-th member.
/// The verdict is invariant under relabeling either side; the checks are
/// purely structural.
struct CorrespondenceCertificate {
  int q = 0;
  std::vector<int> basis_to_class;              // size q+1, identity order
  std::vector<std::vector<int>> vector_to_point; // per basis: plane point ids
  std::vector<CheckResult> checks;               // the five structural checks
  bool all_pass = false;
};

/// Runs the five checks and returns the certificate regardless of verdicts.
/// Throws IncompleteMubSet / ImproperConic when the inputs themselves are
/// malformed (wrong basis count, conic without the proper-class structure).
CorrespondenceCertificate evaluate_correspondence(const MubSet& mubs,
                                                  const Conic& conic,
                                                  const Plane& plane);

/// evaluate_correspondence + StructuralMismatch naming the first failing
/// check, so a returned certificate always has every check green.
CorrespondenceCertificate certify(const MubSet& mubs, const Conic& conic,
                                  const Plane& plane);

} // namespace hjelm
