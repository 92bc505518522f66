#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "csa/complex.hpp"
#include "csa/subdivision.hpp"

namespace csa {

/// A chromatic simplex agreement task: a chromatic input complex I and a
/// chromatic subdivision Div(I), here an iterated standard chromatic
/// subdivision. Carries memoized lookups for the restrictions of Div to
/// base simplexes and for links inside those restrictions; all queries
/// are posed in the id space of the Div result complex.
class Task {
 public:
  /// Builds (I, Ch^N(I)). Requires a chromatic input complex whose
  /// vertex colors are exactly 0..n for some n.
  static Task make_ch(Complex input, int iterations);

  const Complex& input() const { return input_; }
  const Subdivision& div() const { return div_; }
  int iterations() const { return iterations_; }
  const std::string& kind() const { return kind_; }
  int process_count() const { return process_count_; }

  int color_of(VertexId div_vertex) const { return div_.result.vertex(div_vertex).color; }

  bool div_contains(const Simplex& s) const;

  /// Carrier of a Div simplex in the input complex.
  Simplex carrier(const Simplex& s) const;

  /// Membership in the subdivision of a base simplex.
  bool restriction_contains(const Simplex& s, const Simplex& base) const;

  /// Membership in the link of `core` inside the subdivision of `base`.
  /// The empty core gives the whole restriction.
  bool link_contains(const Simplex& s, const Simplex& core, const Simplex& base) const;

  /// Facets of the restriction of Div to a base simplex.
  const std::vector<Simplex>& restriction_facets(const Simplex& base) const;

  /// Facets of Lk(core, Div restricted to base). Throws ContractError if
  /// the core is not a member of the restriction.
  const std::vector<Simplex>& link_facets(const Simplex& core, const Simplex& base) const;

  /// Vertices of the link, sorted by structural label order.
  const std::vector<VertexId>& link_vertices(const Simplex& core, const Simplex& base) const;

  /// Div vertices sorted by structural label order.
  const std::vector<VertexId>& vertices_by_label() const { return by_label_; }

  /// Rank of a Div vertex in structural label order.
  std::size_t label_rank(VertexId v) const { return label_rank_[static_cast<std::size_t>(v)]; }

  /// The unique Div vertex carried by the base vertex {v}.
  VertexId corner_vertex(VertexId base_vertex) const;

  /// A complex view of Lk(core, Div restricted to base), sharing the Div
  /// vertex table.
  Complex link_complex(const Simplex& core, const Simplex& base) const;

 private:
  Complex input_;
  Subdivision div_;
  std::string kind_;
  int iterations_ = 0;
  int process_count_ = 0;

  std::unordered_set<Simplex, SimplexHash> closure_;
  std::vector<Simplex> closure_list_;
  std::vector<VertexId> by_label_;
  std::vector<std::size_t> label_rank_;
  std::vector<VertexId> corners_;  // base vertex id -> div vertex id

  struct CacheKey {
    Simplex core;
    Simplex base;
    bool operator<(const CacheKey& o) const {
      if (core != o.core) return core < o.core;
      return base < o.base;
    }
  };
  // node-based maps keep returned references stable across inserts; the
  // mutex makes concurrent read-only use of a shared task safe
  struct Caches {
    std::mutex mutex;
    std::map<Simplex, std::vector<Simplex>> restriction;
    std::map<CacheKey, std::vector<Simplex>> link_facets;
    std::map<CacheKey, std::vector<VertexId>> link_vertices;
  };
  std::unique_ptr<Caches> caches_ = std::make_unique<Caches>();

  const std::vector<Simplex>& restriction_facets_locked(const Simplex& base) const;
};

}  // namespace csa
