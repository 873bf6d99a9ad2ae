#pragma once

#include <optional>
#include <vector>

#include "hjelm/plane.hpp"

namespace hjelm {

/// Arc: points pairwise remote (non-neighbour) with no three on a common
/// line. Every subset of an arc is again an arc.
bool is_arc(const std::vector<int>& point_indices, const Plane& plane);

struct ArcSearchOptions {
  std::optional<int> target;            // stop at the first arc of this size
  std::optional<long> time_budget_ms;   // best-effort cutoff
};

struct ArcSearchResult {
  int max_size = 0;
  std::vector<int> witness;     // lexicographically first arc of max_size
  long census = 0;              // arcs of size max_size seen by the search
  bool exhausted = false;       // true iff the search tree was fully explored
  unsigned long nodes_visited = 0;
};

/// Deterministic exhaustive backtracking over neighbour classes (at most one
/// arc point per class, which settles remoteness up front). `census` and
/// `max_size` are exact when `exhausted` is true; with a target or an expired
/// time budget the result reports what was found so far.
ArcSearchResult max_arc_search(const Plane& plane, const ArcSearchOptions& options = {});

} // namespace hjelm
