#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles
// are deliberately written against the definitions, not against the
// library internals they cross-check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "csa/complex.hpp"

namespace testsupport {

/// Hollow triangle: three vertices, three edges, no 2-face.
inline csa::Complex hollow_triangle() {
  std::vector<csa::Vertex> vs;
  for (int i = 0; i < 3; ++i) vs.push_back({i, i, "v" + std::to_string(i)});
  return csa::Complex::build(std::move(vs), {{0, 1}, {1, 2}, {0, 2}});
}

/// Number of ordered set partitions of an n-element set, computed from
/// the recurrence F(n) = sum_k C(n,k) F(n-k), F(0) = 1.
inline long fubini(int n) {
  std::vector<long> f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k) {
      long binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (m - i) / (i + 1);
      f[static_cast<std::size_t>(m)] += binom * f[static_cast<std::size_t>(m - k)];
    }
  }
  return f[static_cast<std::size_t>(n)];
}

/// Counts maximal inclusion chains of nonempty simplexes of a complex by
/// direct recursion over the closure.
inline long count_maximal_chains(const csa::Complex& c) {
  const auto all = c.all_simplexes();
  std::set<csa::Simplex> members(all.begin(), all.end());
  // a chain is maximal iff it starts at a vertex, each step adds a
  // single vertex, and it ends at a facet
  std::map<csa::Simplex, long> paths;  // chains from a vertex up to s
  long total = 0;
  std::vector<csa::Simplex> by_size(all.begin(), all.end());
  std::sort(by_size.begin(), by_size.end(),
            [](const csa::Simplex& a, const csa::Simplex& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const auto& s : by_size) {
    if (s.size() == 1) {
      paths[s] = 1;
      continue;
    }
    long count = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      csa::Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      count += paths[face];
    }
    paths[s] = count;
  }
  for (const auto& f : c.facets()) total += paths[f];
  return total;
}

/// Brute-force enumeration of the standard chromatic subdivision of a
/// single colored simplex, straight from the defining conditions: a set
/// of (color, face) pairs is a simplex iff the faces can be ordered by
/// inclusion and every pair whose color lies in another pair's face is
/// contained in that face. Returns all member simplexes as sets of
/// pairs.
using ChromPair = std::pair<int, csa::Simplex>;

inline std::vector<std::set<ChromPair>> enumerate_ch_simplexes(
    const csa::Complex& base_simplex) {
  const auto& facet = base_simplex.facets().at(0);
  std::vector<ChromPair> universe;
  for (csa::VertexId v : facet) {
    const int color = base_simplex.vertex(v).color;
    // nonempty faces of the facet containing v
    csa::Simplex rest = csa::simplex_difference(facet, {v});
    for (std::uint64_t mask = 0; mask < (1ull << rest.size()); ++mask) {
      csa::Simplex face{v};
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (mask & (1ull << i)) face.push_back(rest[i]);
      universe.emplace_back(color, csa::normalize_simplex(std::move(face)));
    }
  }
  auto valid = [&base_simplex](const std::set<ChromPair>& tuple) {
    for (const auto& [ci, fi] : tuple) {
      for (const auto& [cj, fj] : tuple) {
        const bool i_in_j = fj.end() != std::find_if(fj.begin(), fj.end(),
                                                     [&, ci = ci](csa::VertexId v) {
                                                       return base_simplex.vertex(v).color == ci;
                                                     });
        if (i_in_j && !csa::is_subset(fi, fj)) return false;
        if (ci == cj && fi != fj) return false;  // one face per color
        (void)cj;
      }
    }
    // orderable by inclusion
    std::vector<csa::Simplex> faces;
    for (const auto& [c, f] : tuple) faces.push_back(f);
    std::sort(faces.begin(), faces.end(), [](const csa::Simplex& a, const csa::Simplex& b) {
      return a.size() < b.size();
    });
    for (std::size_t i = 1; i < faces.size(); ++i)
      if (!csa::is_subset(faces[i - 1], faces[i])) return false;
    return true;
  };
  std::vector<std::set<ChromPair>> out;
  const std::size_t u = universe.size();
  for (std::uint64_t mask = 1; mask < (1ull << u); ++mask) {
    std::set<ChromPair> tuple;
    for (std::size_t i = 0; i < u; ++i)
      if (mask & (1ull << i)) tuple.insert(universe[i]);
    if (valid(tuple)) out.push_back(std::move(tuple));
  }
  return out;
}

}  // namespace testsupport
