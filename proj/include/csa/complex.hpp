#pragma once

#include <set>
#include <string>
#include <vector>

#include "csa/simplex.hpp"

namespace csa {

/// Color value for vertices that carry no process color (barycenters).
constexpr int kNoColor = -1;

struct Vertex {
  VertexId id = 0;
  int color = kNoColor;
  std::string label;
};

/// Abstract chromatic simplicial complex. Stored as a vertex table plus
/// the set of maximal simplexes; membership of any subset is decided by
/// downward closure against the facets.
///
/// Subcomplex operations (skeleton, star, link) return complexes that
/// keep the parent id space: the vertex table is shared verbatim and a
/// vertex belongs to the subcomplex iff it appears in one of its facets.
class Complex {
 public:
  Complex() = default;

  /// Builds a complex from a vertex table and a family of simplexes.
  /// Non-maximal entries are absorbed; vertices covered by no input
  /// simplex become singleton facets so that every table vertex is a
  /// member. Throws InputError on duplicate or dangling vertex ids.
  static Complex build(std::vector<Vertex> vertices, std::vector<Simplex> facets);

  const std::vector<Vertex>& vertex_table() const { return vertices_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const Vertex& vertex(VertexId v) const;

  bool empty() const { return facets_.empty(); }
  int dimension() const;  // max facet dimension, -1 if empty
  bool is_pure() const;

  /// True iff the simplex is a subset of some facet. The empty simplex
  /// belongs to every complex.
  bool contains(const Simplex& s) const;

  /// True iff {v} is a member, i.e. v occurs in some facet.
  bool has_vertex(VertexId v) const;

  /// Ids of vertices that occur in at least one facet, ascending.
  std::vector<VertexId> active_vertices() const;

  Complex skeleton(int n) const;
  Complex star(const Simplex& s) const;
  Complex link(const Simplex& s) const;

  /// True iff every facet has pairwise distinct, defined colors.
  bool is_chromatic() const;

  std::set<int> colors_of(const Simplex& s) const;

  /// All nonempty member simplexes (downward closure of the facets),
  /// in lexicographic order. Materialized on demand.
  std::vector<Simplex> all_simplexes() const;

  std::size_t facet_count() const { return facets_.size(); }

  /// Structural label order used for deterministic vertex choices:
  /// (label, id) lexicographic.
  bool label_less(VertexId a, VertexId b) const;

  /// Replaces the facet family, keeping the vertex table. Used by
  /// subcomplex constructions; input facets must reference table ids.
  Complex with_facets(std::vector<Simplex> facets) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Simplex> facets_;
};

/// Canonical facet family: each simplex sorted, family lex-sorted,
/// duplicates and non-maximal members removed.
std::vector<Simplex> canonical_facets(std::vector<Simplex> facets);

/// The complex of a single n-simplex with vertex colors 0..n.
Complex standard_simplex(int n);

}  // namespace csa
