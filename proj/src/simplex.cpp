#include "csa/simplex.hpp"

#include <algorithm>

namespace csa {

bool is_strictly_sorted(const Simplex& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

Simplex normalize_simplex(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

Simplex normalize_simplex(std::initializer_list<VertexId> ids) {
  return normalize_simplex(std::vector<VertexId>(ids));
}

bool simplex_contains(const Simplex& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const Simplex& sub, const Simplex& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex simplex_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace csa
