#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace csa {

using VertexId = int;

/// A simplex is a strictly ascending list of vertex ids.
/// The empty simplex is a member of every complex.
using Simplex = std::vector<VertexId>;

/// dim(s) = |s| - 1; the empty simplex has dimension -1.
inline int dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

bool is_strictly_sorted(const Simplex& s);

/// Sorts and deduplicates an arbitrary id list into simplex form.
Simplex normalize_simplex(std::vector<VertexId> ids);
Simplex normalize_simplex(std::initializer_list<VertexId> ids);

bool simplex_contains(const Simplex& s, VertexId v);
bool is_subset(const Simplex& sub, const Simplex& super);
Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_intersection(const Simplex& a, const Simplex& b);
Simplex simplex_difference(const Simplex& a, const Simplex& b);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace csa
