#include "hjelm/arc.hpp"

#include <chrono>
#include <set>

namespace hjelm {

bool is_arc(const std::vector<int>& point_indices, const Plane& plane) {
  std::set<int> pts;
  for (int p : point_indices) {
    if (p < 0 || p >= plane.point_count())
      fail(Errc::PointsNotInPlane, "point index out of range");
    pts.insert(p);
  }
  std::vector<int> v(pts.begin(), pts.end());
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (plane.neighbour_points(v[i], v[j])) return false;
  for (int l = 0; l < plane.line_count(); ++l) {
    int on = 0;
    for (int p : v)
      if (plane.incident(l, p) && ++on == 3) return false;
  }
  return true;
}

namespace {

struct Searcher {
  const Plane& plane;
  const std::vector<NeighbourClass>& classes;
  std::vector<std::vector<int>> lines_through; // per point
  std::vector<int> line_load;                  // chosen points per line
  std::vector<int> chosen;
  ArcSearchResult result;
  std::optional<int> target;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;
  bool stop = false;

  explicit Searcher(const Plane& p)
      : plane(p), classes(p.point_classes()), line_load(p.line_count(), 0) {
    lines_through.resize(plane.point_count());
    for (int pt = 0; pt < plane.point_count(); ++pt)
      lines_through[pt] = plane.lines_through_point(pt);
  }

  bool admissible(int point) const {
    for (int l : lines_through[point])
      if (line_load[l] >= 2) return false;
    return true;
  }

  void place(int point, int delta) {
    for (int l : lines_through[point]) line_load[l] += delta;
  }

  void record_leaf() {
    const int size = static_cast<int>(chosen.size());
    if (size > result.max_size) {
      result.max_size = size;
      result.witness = chosen;
      result.census = 1;
    } else if (size == result.max_size && size > 0) {
      ++result.census;
    }
    if (target && size >= *target) {
      result.witness = chosen;
      stop = true;
    }
  }

  void dfs(int class_index) {
    if (stop) return;
    if (++result.nodes_visited % 4096 == 0 && has_deadline &&
        std::chrono::steady_clock::now() >= deadline)
      stop = true;
    const int remaining = static_cast<int>(classes.size()) - class_index;
    // Cannot reach the current best size anymore: irrelevant for both the
    // maximum and the census of maximum-size arcs.
    if (static_cast<int>(chosen.size()) + remaining < result.max_size) return;
    if (class_index == static_cast<int>(classes.size())) {
      record_leaf();
      return;
    }
    for (int point : classes[class_index].members) {
      if (!admissible(point)) continue;
      chosen.push_back(point);
      place(point, +1);
      dfs(class_index + 1);
      place(point, -1);
      chosen.pop_back();
      if (stop) return;
    }
    dfs(class_index + 1); // skip this class
  }
};

} // namespace

ArcSearchResult max_arc_search(const Plane& plane, const ArcSearchOptions& options) {
  Searcher s(plane);
  s.target = options.target;
  if (options.time_budget_ms) {
    s.has_deadline = true;
    s.deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(*options.time_budget_ms);
  }
  s.dfs(0);
  s.result.exhausted = !s.stop;
  return s.result;
}

} // namespace hjelm
