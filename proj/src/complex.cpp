#include "csa/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "csa/errors.hpp"

namespace csa {

std::vector<Simplex> canonical_facets(std::vector<Simplex> facets) {
  for (auto& f : facets) f = normalize_simplex(std::move(f));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // drop non-maximal members
  std::vector<Simplex> maximal;
  for (const auto& f : facets) {
    bool covered = false;
    for (const auto& g : facets) {
      if (f.size() < g.size() && is_subset(f, g)) {
        covered = true;
        break;
      }
    }
    if (!covered && !f.empty()) maximal.push_back(f);
  }
  return maximal;
}

Complex Complex::build(std::vector<Vertex> vertices, std::vector<Simplex> facets) {
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id != static_cast<VertexId>(i)) {
      if (i > 0 && vertices[i].id == vertices[i - 1].id)
        throw InputError("duplicate vertex id " + std::to_string(vertices[i].id));
      throw InputError("vertex ids must be dense 0..V-1, got " +
                       std::to_string(vertices[i].id));
    }
  }
  const VertexId n = static_cast<VertexId>(vertices.size());
  for (const auto& f : facets)
    for (VertexId v : f)
      if (v < 0 || v >= n)
        throw InputError("facet references dangling vertex id " + std::to_string(v));

  facets = canonical_facets(std::move(facets));

  // every table vertex is a member: uncovered vertices become singleton facets
  std::vector<bool> covered(n, false);
  for (const auto& f : facets)
    for (VertexId v : f) covered[v] = true;
  for (VertexId v = 0; v < n; ++v)
    if (!covered[v]) facets.push_back({v});
  std::sort(facets.begin(), facets.end());

  Complex c;
  c.vertices_ = std::move(vertices);
  c.facets_ = std::move(facets);
  return c;
}

const Vertex& Complex::vertex(VertexId v) const {
  if (v < 0 || v >= static_cast<VertexId>(vertices_.size()))
    throw InputError("vertex id out of range: " + std::to_string(v));
  return vertices_[v];
}

int Complex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, dim(f));
  return d;
}

bool Complex::is_pure() const {
  if (facets_.empty()) return true;
  const int d = dimension();
  return std::all_of(facets_.begin(), facets_.end(),
                     [d](const Simplex& f) { return dim(f) == d; });
}

bool Complex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(),
                     [&s](const Simplex& f) { return is_subset(s, f); });
}

bool Complex::has_vertex(VertexId v) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [v](const Simplex& f) { return simplex_contains(f, v); });
}

std::vector<VertexId> Complex::active_vertices() const {
  std::set<VertexId> ids;
  for (const auto& f : facets_) ids.insert(f.begin(), f.end());
  return {ids.begin(), ids.end()};
}

Complex Complex::with_facets(std::vector<Simplex> facets) const {
  for (const auto& f : facets)
    for (VertexId v : f)
      if (v < 0 || v >= static_cast<VertexId>(vertices_.size()))
        throw InputError("facet references dangling vertex id " + std::to_string(v));
  Complex c;
  c.vertices_ = vertices_;
  c.facets_ = canonical_facets(std::move(facets));
  return c;
}

Complex Complex::skeleton(int n) const {
  if (n < 0) throw InputError("skeleton dimension must be non-negative");
  std::set<Simplex> out;
  for (const auto& f : facets_) {
    if (dim(f) <= n) {
      out.insert(f);
      continue;
    }
    // all n-faces of f
    const std::size_t k = static_cast<std::size_t>(n) + 1;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Simplex face(k);
      for (std::size_t i = 0; i < k; ++i) face[i] = f[idx[i]];
      out.insert(std::move(face));
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == f.size() - (k - i) - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return with_facets({out.begin(), out.end()});
}

Complex Complex::star(const Simplex& s) const {
  if (!contains(s)) throw InputError("star: simplex not in complex");
  std::vector<Simplex> out;
  for (const auto& f : facets_)
    if (is_subset(s, f)) out.push_back(f);
  return with_facets(std::move(out));
}

Complex Complex::link(const Simplex& s) const {
  if (!contains(s)) throw InputError("link: simplex not in complex");
  std::vector<Simplex> out;
  for (const auto& f : facets_)
    if (is_subset(s, f)) out.push_back(simplex_difference(f, s));
  return with_facets(std::move(out));
}

bool Complex::is_chromatic() const {
  for (const auto& f : facets_) {
    std::set<int> colors;
    for (VertexId v : f) {
      const int c = vertices_[v].color;
      if (c == kNoColor || !colors.insert(c).second) return false;
    }
  }
  return true;
}

std::set<int> Complex::colors_of(const Simplex& s) const {
  std::set<int> colors;
  for (VertexId v : s) colors.insert(vertex(v).color);
  return colors;
}

std::vector<Simplex> Complex::all_simplexes() const {
  std::set<Simplex> out;
  for (const auto& f : facets_) {
    // enumerate nonempty subsets of f
    const std::size_t k = f.size();
    if (k > 62) throw InputError("closure enumeration limited to facets of dimension 61");
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1ull << i)) s.push_back(f[i]);
      out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

bool Complex::label_less(VertexId a, VertexId b) const {
  const Vertex& va = vertex(a);
  const Vertex& vb = vertex(b);
  if (va.label != vb.label) return va.label < vb.label;
  return a < b;
}

Complex standard_simplex(int n) {
  std::vector<Vertex> vertices;
  Simplex top;
  for (int i = 0; i <= n; ++i) {
    vertices.push_back({i, i, "v" + std::to_string(i)});
    top.push_back(i);
  }
  return Complex::build(std::move(vertices), {top});
}

}  // namespace csa
