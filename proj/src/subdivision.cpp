#include "csa/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "csa/errors.hpp"

namespace csa {

namespace {

std::string ids_to_string(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

/// Collects labeled result vertices across facet-local constructions and
/// assigns dense ids in label order.
class VertexGlue {
 public:
  VertexId intern(const std::string& label, int color, Simplex carrier) {
    auto it = by_label_.find(label);
    if (it != by_label_.end()) return it->second.id;
    Entry e{static_cast<VertexId>(by_label_.size()), color, std::move(carrier)};
    return by_label_.emplace(label, std::move(e)).first->second.id;
  }

  /// Renumbers vertices in label order and returns (table, carrier list,
  /// old id -> new id map).
  struct Frozen {
    std::vector<Vertex> table;
    std::vector<Simplex> carriers;
    std::vector<VertexId> remap;
  };
  Frozen freeze() const {
    Frozen f;
    f.remap.resize(by_label_.size());
    VertexId next = 0;
    for (const auto& [label, e] : by_label_) {  // std::map: label order
      f.remap[e.id] = next;
      f.table.push_back({next, e.color, label});
      f.carriers.push_back(e.carrier);
      ++next;
    }
    return f;
  }

 private:
  struct Entry {
    VertexId id;
    int color;
    Simplex carrier;
  };
  std::map<std::string, Entry> by_label_;
};

Subdivision freeze_subdivision(const Complex& base, const VertexGlue& glue,
                               const std::vector<Simplex>& raw_facets) {
  auto frozen = glue.freeze();
  std::vector<Simplex> facets;
  facets.reserve(raw_facets.size());
  for (const auto& f : raw_facets) {
    Simplex g;
    g.reserve(f.size());
    for (VertexId v : f) g.push_back(frozen.remap[v]);
    facets.push_back(normalize_simplex(std::move(g)));
  }
  Subdivision sub;
  sub.base = base;
  sub.result = Complex::build(std::move(frozen.table), std::move(facets));
  sub.vertex_carrier = std::move(frozen.carriers);
  return sub;
}

}  // namespace

std::string chrom_label(int color, const Simplex& face) {
  return "c" + std::to_string(color) + ":" + ids_to_string(face);
}

std::string bary_label(const Simplex& face) { return "b:" + ids_to_string(face); }

Simplex Subdivision::carrier_of(const Simplex& s) const {
  if (s.empty()) return {};
  if (!result.contains(s)) throw InputError("carrier_of: simplex not in result complex");
  Simplex out;
  for (VertexId v : s) out = simplex_union(out, vertex_carrier[v]);
  return out;
}

Subdivision identity_subdivision(const Complex& base) {
  Subdivision sub;
  sub.base = base;
  sub.result = base;
  sub.vertex_carrier.reserve(base.vertex_table().size());
  for (const auto& v : base.vertex_table()) sub.vertex_carrier.push_back({v.id});
  return sub;
}

Subdivision barycentric(const Complex& base) {
  VertexGlue glue;
  std::vector<Simplex> raw_facets;
  // vertices: all nonempty simplexes of the base
  for (const auto& s : base.all_simplexes())
    glue.intern(bary_label(s), kNoColor, s);
  // facets: maximal chains; every maximal chain tops at a facet and is a
  // vertex ordering of it
  for (const auto& f : base.facets()) {
    Simplex order = f;
    std::sort(order.begin(), order.end());
    do {
      Simplex chain_facet;
      Simplex prefix;
      for (VertexId v : order) {
        prefix = simplex_union(prefix, {v});
        chain_facet.push_back(glue.intern(bary_label(prefix), kNoColor, prefix));
      }
      raw_facets.push_back(std::move(chain_facet));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return freeze_subdivision(base, glue, raw_facets);
}

namespace {

/// All nonempty faces of `facet` containing base vertex `anchor`.
std::vector<Simplex> faces_through(const Simplex& facet, VertexId anchor) {
  Simplex rest = simplex_difference(facet, {anchor});
  std::vector<Simplex> out;
  const std::size_t k = rest.size();
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    Simplex face{anchor};
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ull << i)) face.push_back(rest[i]);
    out.push_back(normalize_simplex(std::move(face)));
  }
  return out;
}

bool chain_ordered(const std::vector<Simplex>& faces) {
  auto sorted = faces;
  std::sort(sorted.begin(), sorted.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!is_subset(sorted[i - 1], sorted[i])) return false;
  return true;
}

}  // namespace

Subdivision chromatic_subdivision(const Complex& base) {
  if (!base.is_chromatic())
    throw TaskError("chromatic_subdivision requires a chromatic base complex");

  VertexGlue glue;
  std::vector<Simplex> raw_facets;
  std::set<Simplex> seen_facets;

  for (const auto& facet : base.facets()) {
    const std::size_t k = facet.size();
    if (k > 8)
      throw InputError("chromatic subdivision enumeration is limited to facets of dimension 7");
    // per base vertex, the candidate faces its pair may name
    std::vector<std::vector<Simplex>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) candidates[i] = faces_through(facet, facet[i]);

    // enumerate one face choice per vertex and keep the tuples
    // satisfying the subdivision conditions
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      std::vector<Simplex> faces(k);
      for (std::size_t i = 0; i < k; ++i) faces[i] = candidates[i][choice[i]];

      bool ok = chain_ordered(faces);
      if (ok) {
        // domination: if vertex i lies in the face named by j, the face
        // named by i is contained in it
        for (std::size_t j = 0; ok && j < k; ++j)
          for (std::size_t i = 0; ok && i < k; ++i)
            if (simplex_contains(faces[j], facet[i]) && !is_subset(faces[i], faces[j]))
              ok = false;
      }
      if (ok) {
        Simplex raw;
        for (std::size_t i = 0; i < k; ++i) {
          const int color = base.vertex(facet[i]).color;
          raw.push_back(glue.intern(chrom_label(color, faces[i]), color, faces[i]));
        }
        raw = normalize_simplex(std::move(raw));
        if (seen_facets.insert(raw).second) raw_facets.push_back(std::move(raw));
      }

      std::size_t pos = 0;
      while (pos < k && ++choice[pos] == candidates[pos].size()) choice[pos++] = 0;
      if (pos == k) break;
    }
  }
  return freeze_subdivision(base, glue, raw_facets);
}

namespace {

Subdivision iterate(const Complex& base, int n,
                    Subdivision (*step)(const Complex&)) {
  if (n < 0) throw InputError("iteration count must be non-negative");
  Subdivision cur = identity_subdivision(base);
  for (int i = 0; i < n; ++i) {
    Subdivision next = step(cur.result);
    // compose carriers into the original base
    std::vector<Simplex> composed;
    composed.reserve(next.vertex_carrier.size());
    for (const auto& mid : next.vertex_carrier) composed.push_back(cur.carrier_of(mid));
    cur.result = std::move(next.result);
    cur.vertex_carrier = std::move(composed);
  }
  return cur;
}

}  // namespace

Subdivision iterate_ch(const Complex& base, int n) {
  return iterate(base, n, &chromatic_subdivision);
}

Subdivision iterate_bary(const Complex& base, int n) {
  return iterate(base, n, &barycentric);
}

SubdivisionCheck verify_chromatic_subdivision(const Subdivision& sub) {
  SubdivisionCheck check;
  auto fail = [&check](std::string msg) {
    check.pass = false;
    check.violations.push_back(std::move(msg));
  };

  if (sub.vertex_carrier.size() != sub.result.vertex_table().size()) {
    fail("carrier table size does not match result vertex table");
    return check;
  }

  if (!sub.result.is_chromatic()) fail("result complex is not properly colored");

  for (const auto& carrier : sub.vertex_carrier)
    if (!sub.base.contains(carrier) || carrier.empty())
      fail("vertex carrier is not a nonempty base simplex");

  const auto result_simplexes = sub.result.all_simplexes();
  auto carrier_fast = [&sub](const Simplex& s) {
    Simplex out;
    for (VertexId v : s) out = simplex_union(out, sub.vertex_carrier[v]);
    return out;
  };
  std::vector<Simplex> carriers;
  carriers.reserve(result_simplexes.size());
  for (const auto& tau : result_simplexes) carriers.push_back(carrier_fast(tau));

  // carrier monotonicity over facet/face incidences
  for (const auto& f : sub.result.facets()) {
    const Simplex cf = carrier_fast(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      Simplex face = f;
      face.erase(face.begin() + static_cast<long>(i));
      if (!face.empty() && !is_subset(carrier_fast(face), cf))
        fail("carrier not monotone on a face of facet [" + ids_to_string(f) + "]");
    }
  }

  // per base simplex: the carried part is pure of matching dimension and
  // has exactly the base colors
  for (const auto& sigma : sub.base.all_simplexes()) {
    std::vector<const Simplex*> carried;
    for (std::size_t i = 0; i < result_simplexes.size(); ++i)
      if (is_subset(carriers[i], sigma)) carried.push_back(&result_simplexes[i]);
    if (carried.empty()) {
      fail("no result simplex carried by base simplex [" + ids_to_string(sigma) + "]");
      continue;
    }
    std::set<int> colors;
    int max_dim = -1;
    for (const Simplex* tau : carried) {
      max_dim = std::max(max_dim, dim(*tau));
      for (VertexId v : *tau) colors.insert(sub.result.vertex(v).color);
    }
    if (colors != sub.base.colors_of(sigma))
      fail("colors over base simplex [" + ids_to_string(sigma) +
           "] differ from the base colors");
    if (max_dim != dim(sigma))
      fail("restriction over base simplex [" + ids_to_string(sigma) +
           "] has wrong dimension");
    // purity: a carried simplex below top dimension must have a carried
    // coface one vertex larger (the carried part is downward closed)
    std::set<Simplex> extendable;
    for (const Simplex* rho : carried) {
      for (std::size_t i = 0; i < rho->size(); ++i) {
        Simplex face = *rho;
        face.erase(face.begin() + static_cast<long>(i));
        if (!face.empty()) extendable.insert(std::move(face));
      }
    }
    for (const Simplex* tau : carried) {
      if (dim(*tau) < max_dim && !extendable.count(*tau)) {
        fail("restriction over base simplex [" + ids_to_string(sigma) +
             "] is not pure");
        break;
      }
    }
  }
  return check;
}

}  // namespace csa
