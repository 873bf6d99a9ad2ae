#include "hjelm/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace hjelm {

std::optional<Triple> canonical_triple(const Ring& ring, const Triple& raw) {
  for (int i = 0; i < 3; ++i) {
    if (ring.unit(raw[i])) {
      const int s = ring.inverse(raw[i]);
      Triple out;
      for (int j = 0; j < 3; ++j) out[j] = ring.mul(s, raw[j]);
      return out;
    }
  }
  return std::nullopt;
}

bool incident_triples(const Ring& ring, const Triple& line, const Triple& point) {
  int acc = 0;
  for (int i = 0; i < 3; ++i) acc = ring.add(acc, ring.mul(line[i], point[i]));
  return acc == 0;
}

namespace {

std::int64_t pack(const Triple& t, int n) {
  return (static_cast<std::int64_t>(t[0]) * n + t[1]) * n + t[2];
}

} // namespace

PlanePtr Plane::enumerate(RingPtr ring, const PlaneOptions& options) {
  if (ring->q() > options.max_q)
    fail(Errc::RingTooLarge, "plane enumeration capped at q = " +
                                 std::to_string(options.max_q));
  auto plane = std::shared_ptr<Plane>(new Plane());
  plane->ring_ = std::move(ring);
  plane->build(options);
  return plane;
}

void Plane::build(const PlaneOptions& options) {
  const Ring& R = *ring_;
  const int n = R.size();
  const auto& zd = R.zero_divisor_indices();
  const int one = R.one().index();

  // Canonical triples stratified by the position of the leftmost unit:
  // (1,*,*), (z,1,*), (z,z,1) with z ranging over zero divisors.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) triples_.push_back({one, a, b});
  for (int z : zd)
    for (int b = 0; b < n; ++b) triples_.push_back({z, one, b});
  for (int z1 : zd)
    for (int z2 : zd) triples_.push_back({z1, z2, one});
  std::sort(triples_.begin(), triples_.end());

  const long expected =
      (static_cast<long>(n) * n * n - static_cast<long>(zd.size()) * zd.size() * zd.size()) /
      R.counts().units;
  if (static_cast<long>(triples_.size()) != expected)
    throw std::logic_error("point count disagrees with (#t^3 - #z^3) / #u");

  lookup_.reserve(triples_.size() * 2);
  for (int i = 0; i < static_cast<int>(triples_.size()); ++i)
    lookup_.emplace(pack(triples_[i], n), i);

  // Epimorphism: reduce coordinates, canonicalize downstairs.
  if (R.kind() == RingKind::Field) {
    point_image_.resize(triples_.size());
    for (size_t i = 0; i < triples_.size(); ++i)
      point_image_[i] = static_cast<int>(i);
    line_image_ = point_image_;
  } else {
    PlaneOptions sub = options;
    shadow_ = Plane::enumerate(R.residue_field(), sub);
    const Ring& F = *R.residue_field();
    point_image_.reserve(triples_.size());
    for (const Triple& t : triples_) {
      Triple red{R.reduce_index(t[0]), R.reduce_index(t[1]), R.reduce_index(t[2])};
      auto canon = canonical_triple(F, red);
      if (!canon) throw std::logic_error("reduced triple has no unit coordinate");
      auto idx = shadow_->find_triple(*canon);
      if (!idx) throw std::logic_error("reduced triple missing downstairs");
      point_image_.push_back(*idx);
    }
    line_image_ = point_image_; // same triples, same reduction
  }

  // Neighbour classes: group by image, ordered by first occurrence.
  auto build_classes = [&](const std::vector<int>& image,
                           std::vector<NeighbourClass>& classes,
                           std::vector<int>& class_of) {
    std::unordered_map<int, int> pos;
    class_of.assign(triples_.size(), -1);
    for (int i = 0; i < static_cast<int>(triples_.size()); ++i) {
      auto [it, fresh] = pos.emplace(image[i], static_cast<int>(classes.size()));
      if (fresh) classes.push_back(NeighbourClass{{}, image[i]});
      classes[it->second].members.push_back(i);
      class_of[i] = it->second;
    }
  };
  build_classes(point_image_, point_classes_, point_class_of_);
  build_classes(line_image_, line_classes_, line_class_of_);

  const size_t class_count = point_classes_.size();
  const size_t class_size = triples_.size() / class_count;
  for (const auto& c : point_classes_)
    if (c.members.size() != class_size)
      throw std::logic_error("neighbour classes are not equally sized");

  // Incidence bit matrix (rows = lines) within the configured budget.
  if (static_cast<long>(triples_.size()) <= options.max_points_for_matrix) {
    matrix_ = true;
    const size_t words = (triples_.size() + 63) / 64;
    bits_.assign(words * triples_.size(), 0);
    for (size_t l = 0; l < triples_.size(); ++l)
      for (size_t p = 0; p < triples_.size(); ++p)
        if (incident_triples(R, triples_[l], triples_[p]))
          bits_[l * words + p / 64] |= std::uint64_t{1} << (p % 64);
  }
}

std::array<Elem, 3> Plane::point_elems(int index) const {
  const Triple& t = triples_.at(index);
  return {ring_->element(t[0]), ring_->element(t[1]), ring_->element(t[2])};
}

std::optional<int> Plane::find_triple(const Triple& canonical) const {
  auto it = lookup_.find(pack(canonical, ring_->size()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Plane::find_point(const std::array<Elem, 3>& coords) const {
  for (const Elem& e : coords)
    if (!same_ring(e.ring(), *ring_)) fail(Errc::MixedRings, "coordinates from a foreign ring");
  Triple raw{coords[0].index(), coords[1].index(), coords[2].index()};
  auto canon = canonical_triple(*ring_, raw);
  if (!canon) return std::nullopt;
  return find_triple(*canon);
}

bool Plane::incident(int line_index, int point_index) const {
  if (matrix_) {
    const size_t words = (triples_.size() + 63) / 64;
    return (bits_[line_index * words + point_index / 64] >>
            (point_index % 64)) & 1;
  }
  return incident_triples(*ring_, triples_[line_index], triples_[point_index]);
}

std::vector<int> Plane::points_on_line(int line_index) const {
  if (line_index < 0 || line_index >= line_count())
    fail(Errc::LineNotInPlane, "line index out of range");
  std::vector<int> out;
  for (int p = 0; p < point_count(); ++p)
    if (incident(line_index, p)) out.push_back(p);
  return out;
}

std::vector<int> Plane::lines_through_point(int point_index) const {
  if (point_index < 0 || point_index >= point_count())
    fail(Errc::PointsNotInPlane, "point index out of range");
  std::vector<int> out;
  for (int l = 0; l < line_count(); ++l)
    if (incident(l, point_index)) out.push_back(l);
  return out;
}

PlanePtr Plane::residue_plane() const {
  if (ring_->kind() == RingKind::Field)
    return std::static_pointer_cast<const Plane>(shared_from_this());
  return shadow_;
}

std::vector<NeighbourClass> Plane::line_class_structure(int line_index) const {
  const std::vector<int> pts = points_on_line(line_index);
  std::vector<NeighbourClass> traces;
  std::unordered_map<int, int> pos;
  for (int p : pts) {
    const int img = point_image_[p];
    auto [it, fresh] = pos.emplace(img, static_cast<int>(traces.size()));
    if (fresh) traces.push_back(NeighbourClass{{}, img});
    traces[it->second].members.push_back(p);
  }
  return traces;
}

std::vector<NeighbourClass> Plane::line_class_structure(const Triple& line_coords) const {
  auto canon = canonical_triple(*ring_, line_coords);
  if (!canon) fail(Errc::LineNotInPlane, "coordinates have no unit entry");
  auto idx = find_triple(*canon);
  if (!idx) fail(Errc::LineNotInPlane, "no such line");
  return line_class_structure(*idx);
}

} // namespace hjelm
