#include "hjelm/classical.hpp"

#include <algorithm>
#include <set>

namespace hjelm {

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::make_pair(q, 1); // q prime
  int r = 0;
  int v = q;
  while (v % p == 0) {
    v /= p;
    ++r;
  }
  if (v != 1) return std::nullopt;
  return std::make_pair(p, r);
}

PlanePtr enumerate_classical(int q, const PlaneOptions& options) {
  auto pr = prime_power(q);
  if (!pr)
    fail(Errc::UnsupportedOrder, "q = " + std::to_string(q) + " is not a prime power");
  RingOptions ropt;
  ropt.max_q = options.max_q;
  return Plane::enumerate(Ring::field(pr->first, pr->second, ropt), options);
}

bool is_nondegenerate_conic_image(const Plane& classical,
                                  const std::vector<int>& point_indices) {
  std::set<int> pts(point_indices.begin(), point_indices.end());
  if (static_cast<int>(pts.size()) != classical.ring()->q() + 1) return false;
  std::vector<int> v(pts.begin(), pts.end());
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      for (size_t k = j + 1; k < v.size(); ++k)
        for (int l = 0; l < classical.line_count(); ++l)
          if (classical.incident(l, v[i]) && classical.incident(l, v[j]) &&
              classical.incident(l, v[k]))
            return false;
  return true;
}

} // namespace hjelm
