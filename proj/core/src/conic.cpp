#include "hjelm/conic.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "hjelm/classical.hpp"

namespace hjelm {

const char* to_string(Properness v) {
  switch (v) {
    case Properness::Proper: return "proper";
    case Properness::Improper: return "improper";
    case Properness::Unknown: return "unknown";
  }
  return "?";
}

namespace {

void require_valid(const Conic& conic) {
  const Ring& R = *conic.ring;
  for (int c : conic.coeffs)
    if (R.unit(c)) return;
  fail(Errc::AllCoefficientsNonUnit, "conic needs at least one unit coefficient");
}

void require_same_ring(const Conic& conic, const Plane& plane) {
  if (!same_ring(*conic.ring, *plane.ring()))
    fail(Errc::MixedRings, "conic and plane built over different rings");
}

} // namespace

Conic Conic::canonical(RingPtr ring) {
  const Ring& R = *ring;
  std::array<int, 6> c{};
  c[1] = R.neg(R.one().index()); // c22 = -1
  c[4] = R.one().index();        // c13 = 1
  Conic q{std::move(ring), c, "x1*x3 - x2^2"};
  require_valid(q);
  return q;
}

Conic Conic::from_constants(RingPtr ring, const std::array<long, 6>& constants,
                            std::string label) {
  std::array<int, 6> c{};
  for (int i = 0; i < 6; ++i) c[i] = ring->from_int(constants[i]).index();
  Conic q{std::move(ring), c, std::move(label)};
  require_valid(q);
  return q;
}

Conic Conic::from_elements(RingPtr ring, const std::array<Elem, 6>& elements,
                           std::string label) {
  std::array<int, 6> c{};
  for (int i = 0; i < 6; ++i) {
    if (!same_ring(elements[i].ring(), *ring))
      fail(Errc::MixedRings, "conic coefficient from a foreign ring");
    c[i] = elements[i].index();
  }
  Conic q{std::move(ring), c, std::move(label)};
  require_valid(q);
  return q;
}

Elem Conic::evaluate(const Triple& point) const {
  const Ring& R = *ring;
  const int x1 = point[0], x2 = point[1], x3 = point[2];
  int acc = R.mul(coeffs[0], R.mul(x1, x1));
  acc = R.add(acc, R.mul(coeffs[1], R.mul(x2, x2)));
  acc = R.add(acc, R.mul(coeffs[2], R.mul(x3, x3)));
  acc = R.add(acc, R.mul(coeffs[3], R.mul(x1, x2)));
  acc = R.add(acc, R.mul(coeffs[4], R.mul(x1, x3)));
  acc = R.add(acc, R.mul(coeffs[5], R.mul(x2, x3)));
  return R.element(acc);
}

std::vector<int> conic_points(const Conic& conic, const Plane& plane) {
  require_valid(conic);
  require_same_ring(conic, plane);
  std::vector<int> out;
  for (int i = 0; i < plane.point_count(); ++i)
    if (conic.evaluate(plane.point(i)).is_zero()) out.push_back(i);
  return out;
}

ConicCharts canonical_conic_charts(const Ring& ring) {
  ConicCharts charts;
  const int one = ring.one().index();
  for (int t = 0; t < ring.size(); ++t)
    charts.affine.push_back({one, t, ring.mul(t, t)});
  for (int z : ring.zero_divisor_indices())
    charts.at_infinity.push_back({0, z, one});
  return charts;
}

ConicClassDecomposition conic_neighbour_classes(const Conic& conic, const Plane& plane) {
  require_same_ring(conic, plane);
  const Ring& R = *plane.ring();
  const std::vector<int> pts = conic_points(conic, plane);
  const int expected_classes = R.q() + 1;
  const int expected_size = R.size() / R.q();

  ConicClassDecomposition out;
  std::unordered_map<int, int> pos;
  for (int p : pts) {
    const int img = plane.point_image(p);
    auto [it, fresh] = pos.emplace(img, static_cast<int>(out.classes.size()));
    if (fresh) out.classes.push_back(NeighbourClass{{}, img});
    out.classes[it->second].members.push_back(p);
  }

  if (static_cast<int>(out.classes.size()) != expected_classes)
    fail(Errc::NotAProperConic,
         "expected " + std::to_string(expected_classes) + " neighbour classes, found " +
             std::to_string(out.classes.size()));
  for (const auto& c : out.classes)
    if (static_cast<int>(c.members.size()) != expected_size)
      fail(Errc::NotAProperConic, "neighbour class of unexpected size");

  for (const auto& c : out.classes) out.classical_image.push_back(c.image);
  if (!is_nondegenerate_conic_image(*plane.residue_plane(), out.classical_image))
    fail(Errc::NotAProperConic, "classical image is not a nondegenerate conic image");
  return out;
}

namespace {

// Quadratic-form evaluation on a raw column vector.
int eval_form(const Ring& R, const std::array<int, 6>& c, int v1, int v2, int v3) {
  int acc = R.mul(c[0], R.mul(v1, v1));
  acc = R.add(acc, R.mul(c[1], R.mul(v2, v2)));
  acc = R.add(acc, R.mul(c[2], R.mul(v3, v3)));
  acc = R.add(acc, R.mul(c[3], R.mul(v1, v2)));
  acc = R.add(acc, R.mul(c[4], R.mul(v1, v3)));
  acc = R.add(acc, R.mul(c[5], R.mul(v2, v3)));
  return acc;
}

// Exhaustive GL(3,R) scan: does some invertible substitution x = M y yield a
// form with a missing variable? Polarization without division recovers the
// transformed coefficients: c'_ii = Q(col_i), c'_ij = Q(col_i + col_j) -
// Q(col_i) - Q(col_j).
bool eliminable_by_transform(const Conic& conic) {
  const Ring& R = *conic.ring;
  const int n = R.size();
  long total = 1;
  for (int i = 0; i < 9; ++i) total *= n;

  std::array<int, 9> m{};
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (int i = 0; i < 9; ++i) {
      m[i] = static_cast<int>(x % n);
      x /= n;
    }
    // det = m0(m4 m8 - m5 m7) - m1(m3 m8 - m5 m6) + m2(m3 m7 - m4 m6)
    const int det = R.add(
        R.sub(R.mul(m[0], R.sub(R.mul(m[4], m[8]), R.mul(m[5], m[7]))),
              R.mul(m[1], R.sub(R.mul(m[3], m[8]), R.mul(m[5], m[6])))),
        R.mul(m[2], R.sub(R.mul(m[3], m[7]), R.mul(m[4], m[6]))));
    if (!R.unit(det)) continue;

    std::array<int, 3> q_col;
    std::array<std::array<int, 3>, 3> col;
    for (int i = 0; i < 3; ++i) {
      col[i] = {m[0 + i], m[3 + i], m[6 + i]};
      q_col[i] = eval_form(R, conic.coeffs, col[i][0], col[i][1], col[i][2]);
    }
    auto cross = [&](int i, int j) {
      const int s = eval_form(R, conic.coeffs, R.add(col[i][0], col[j][0]),
                              R.add(col[i][1], col[j][1]), R.add(col[i][2], col[j][2]));
      return R.sub(R.sub(s, q_col[i]), q_col[j]);
    };
    const int c12 = cross(0, 1), c13 = cross(0, 2), c23 = cross(1, 2);
    if ((q_col[0] == 0 && c12 == 0 && c13 == 0) ||
        (q_col[1] == 0 && c12 == 0 && c23 == 0) ||
        (q_col[2] == 0 && c13 == 0 && c23 == 0))
      return true;
  }
  return false;
}

} // namespace

Properness is_proper(const Conic& conic, const Plane& plane) {
  require_valid(conic);
  require_same_ring(conic, plane);
  const Ring& R = *plane.ring();

  if (R.q() == 2) // |R| <= 4: GL(3,R) is exhaustible
    return eliminable_by_transform(conic) ? Properness::Improper : Properness::Proper;

  try {
    conic_neighbour_classes(conic, plane);
  } catch (const Error& e) {
    if (e.code() == Errc::NotAProperConic) return Properness::Improper;
    throw;
  }
  // Structural signature holds. The canonical form (up to a unit factor) is
  // known proper; anything else stays undecided.
  const Conic canon = Conic::canonical(plane.ring());
  for (int u : R.unit_indices()) {
    bool match = true;
    for (int i = 0; i < 6 && match; ++i)
      match = conic.coeffs[i] == R.mul(u, canon.coeffs[i]);
    if (match) return Properness::Proper;
  }
  return Properness::Unknown;
}

std::vector<Conic> reference_conics(RingPtr ring) {
  std::vector<Conic> out;
  out.push_back(Conic::canonical(ring));
  out.push_back(Conic::from_constants(ring, {0, 0, -1, 1, 0, 0}, "x1*x2 - x3^2"));
  out.push_back(Conic::from_constants(ring, {-1, 0, 0, 0, 0, 1}, "x2*x3 - x1^2"));
  out.push_back(Conic::from_constants(ring, {0, 0, 1, 1, 0, 0}, "x1*x2 + x3^2"));
  out.push_back(Conic::from_constants(ring, {0, 0, 0, 1, 1, 1},
                                      "x1*x2 + x1*x3 + x2*x3"));
  return out;
}

ConicIntersections conic_pairwise_intersections(const std::vector<Conic>& conics,
                                                const Plane& plane) {
  ConicIntersections report;
  report.conics = conics;
  for (const Conic& c : conics) {
    report.points.push_back(conic_points(c, plane));
    report.verdicts.push_back(is_proper(c, plane));
  }
  for (size_t a = 0; a < conics.size(); ++a)
    for (size_t b = a + 1; b < conics.size(); ++b) {
      ConicIntersections::Pair pair;
      pair.a = static_cast<int>(a);
      pair.b = static_cast<int>(b);
      std::set_intersection(report.points[a].begin(), report.points[a].end(),
                            report.points[b].begin(), report.points[b].end(),
                            std::back_inserter(pair.common));
      report.pairs.push_back(std::move(pair));
    }
  return report;
}

} // namespace hjelm
