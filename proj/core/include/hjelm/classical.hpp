#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hjelm/plane.hpp"

namespace hjelm {

/// q = p^r factorization; empty when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

/// PG(2,q): the ordinary projective plane of order q, built as the plane
/// over GF(q) (q^2+q+1 points and lines, q+1 points per line).
PlanePtr enumerate_classical(int q, const PlaneOptions& options = {});

/// True iff the point set is a (q+1)-point set with no three collinear,
/// i.e. looks like a nondegenerate conic of PG(2,q).
bool is_nondegenerate_conic_image(const Plane& classical,
                                  const std::vector<int>& point_indices);

} // namespace hjelm
