#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hjelm/ring.hpp"

namespace hjelm {

/// Homogeneous coordinate triple, stored as element indices of one ring.
/// Canonical form: the leftmost unit coordinate equals 1.
using Triple = std::array<int, 3>;

/// Scales a triple so its leftmost unit coordinate becomes 1. Empty when no
/// coordinate is a unit (such triples name no point or line of the plane).
std::optional<Triple> canonical_triple(const Ring& ring, const Triple& raw);

/// l . x = 0 test on raw coordinate triples; independent of representatives.
bool incident_triples(const Ring& ring, const Triple& line, const Triple& point);

/// One fiber of the reduction-mod-maximal-ideal map: a maximal set of
/// pairwise neighbour points (or lines), tagged with its image downstairs.
struct NeighbourClass {
  std::vector<int> members; // ascending point (or line) indices
  int image = -1;           // index in the residue plane (self for fields)
};

struct PlaneOptions {
  int max_q = 16;
  // Incidence is materialized as a bit matrix up to this many points and
  // computed on demand beyond it. The default covers ring planes up to
  // q = 5 (775 points); the q = 16 plane would need 69888^2 bits.
  long max_points_for_matrix = 1000;
};

class Plane;
using PlanePtr = std::shared_ptr<const Plane>;

/// The projective plane over a finite local ring R: points and lines are
/// unit-scaling classes of triples with at least one unit entry, incidence
/// is the vanishing dot product. Over GF(q) this is the ordinary plane of
/// order q; over GR(p^2,r) and GF(q)+eGF(q) the neighbour relation has
/// nontrivial classes and the plane maps onto the GF(q) plane.
///
/// Immutable after enumeration; all queries are const and safe to share.
class Plane : public std::enable_shared_from_this<Plane> {
public:
  static PlanePtr enumerate(RingPtr ring, const PlaneOptions& options = {});

  const RingPtr& ring() const { return ring_; }
  int point_count() const { return static_cast<int>(triples_.size()); }
  int line_count() const { return static_cast<int>(triples_.size()); }

  // Points and lines share one canonical coordinate list (perfect duality);
  // indices into either list range over the same triples.
  const Triple& point(int index) const { return triples_.at(index); }
  const Triple& line(int index) const { return triples_.at(index); }
  const std::vector<Triple>& triples() const { return triples_; }

  std::array<Elem, 3> point_elems(int index) const;
  std::optional<int> find_triple(const Triple& canonical) const;
  /// Canonicalizes raw coordinates and looks them up; empty if not a point.
  std::optional<int> find_point(const std::array<Elem, 3>& coords) const;

  bool incident(int line_index, int point_index) const;
  std::vector<int> points_on_line(int line_index) const;
  std::vector<int> lines_through_point(int point_index) const;

  /// Neighbour = equal image under the canonical epimorphism. The
  /// two-common-lines characterization is checked against this in tests.
  bool neighbour_points(int a, int b) const {
    return point_image_[a] == point_image_[b];
  }
  bool neighbour_lines(int a, int b) const {
    return line_image_[a] == line_image_[b];
  }

  /// The plane downstairs: PG(2,q) over the residue field. A field plane is
  /// its own residue plane.
  PlanePtr residue_plane() const;
  int point_image(int point_index) const { return point_image_[point_index]; }
  int line_image(int line_index) const { return line_image_[line_index]; }

  const std::vector<NeighbourClass>& point_classes() const { return point_classes_; }
  const std::vector<NeighbourClass>& line_classes() const { return line_classes_; }
  int class_of_point(int point_index) const { return point_class_of_[point_index]; }
  int class_of_line(int line_index) const { return line_class_of_[line_index]; }

  /// Splits the points of one line by neighbour class, in first-occurrence
  /// order along the line. Over GR(p^2,r) this yields q+1 traces of size q.
  std::vector<NeighbourClass> line_class_structure(int line_index) const;
  std::vector<NeighbourClass> line_class_structure(const Triple& line_coords) const;

private:
  Plane() = default;
  void build(const PlaneOptions& options);

  RingPtr ring_;
  std::vector<Triple> triples_;
  std::unordered_map<std::int64_t, int> lookup_;
  PlanePtr shadow_; // null for field planes
  std::vector<int> point_image_, line_image_;
  std::vector<NeighbourClass> point_classes_, line_classes_;
  std::vector<int> point_class_of_, line_class_of_;
  bool matrix_ = false;
  std::vector<std::uint64_t> bits_;
};

} // namespace hjelm
