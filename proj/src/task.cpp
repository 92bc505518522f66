#include "csa/task.hpp"

#include <algorithm>

#include "csa/errors.hpp"

namespace csa {

Task Task::make_ch(Complex input, int iterations) {
  if (!input.is_chromatic()) throw TaskError("task input complex must be chromatic");
  if (iterations < 0) throw TaskError("iteration count must be non-negative");

  Task task;
  task.kind_ = "ch";
  task.iterations_ = iterations;
  task.div_ = iterate_ch(input, iterations);
  task.input_ = std::move(input);

  int max_color = -1;
  for (const auto& v : task.input_.vertex_table()) max_color = std::max(max_color, v.color);
  task.process_count_ = max_color + 1;

  task.closure_list_ = task.div_.result.all_simplexes();
  task.closure_.insert(task.closure_list_.begin(), task.closure_list_.end());

  const auto& table = task.div_.result.vertex_table();
  task.by_label_.resize(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) task.by_label_[i] = static_cast<VertexId>(i);
  std::sort(task.by_label_.begin(), task.by_label_.end(),
            [&](VertexId a, VertexId b) { return task.div_.result.label_less(a, b); });
  task.label_rank_.resize(table.size());
  for (std::size_t i = 0; i < task.by_label_.size(); ++i)
    task.label_rank_[static_cast<std::size_t>(task.by_label_[i])] = i;

  task.corners_.assign(task.input_.vertex_table().size(), -1);
  for (const auto& v : table) {
    const Simplex& carrier = task.div_.vertex_carrier[static_cast<std::size_t>(v.id)];
    if (carrier.size() == 1) {
      VertexId& slot = task.corners_[static_cast<std::size_t>(carrier[0])];
      if (slot != -1) throw ContractError("subdivision has two vertices over one base vertex");
      slot = v.id;
    }
  }
  for (std::size_t b = 0; b < task.corners_.size(); ++b)
    if (task.corners_[b] == -1)
      throw ContractError("subdivision has no vertex over base vertex " + std::to_string(b));

  return task;
}

bool Task::div_contains(const Simplex& s) const {
  return s.empty() || closure_.count(s) > 0;
}

Simplex Task::carrier(const Simplex& s) const {
  Simplex out;
  for (VertexId v : s) out = simplex_union(out, div_.vertex_carrier[static_cast<std::size_t>(v)]);
  return out;
}

bool Task::restriction_contains(const Simplex& s, const Simplex& base) const {
  if (s.empty()) return true;
  return closure_.count(s) > 0 && is_subset(carrier(s), base);
}

bool Task::link_contains(const Simplex& s, const Simplex& core, const Simplex& base) const {
  if (!simplex_intersection(s, core).empty()) return false;
  return restriction_contains(simplex_union(s, core), base);
}

const std::vector<Simplex>& Task::restriction_facets_locked(const Simplex& base) const {
  auto it = caches_->restriction.find(base);
  if (it != caches_->restriction.end()) return it->second;

  std::vector<Simplex> members;
  for (const auto& s : closure_list_)
    if (is_subset(carrier(s), base)) members.push_back(s);
  // keep the maximal ones
  std::vector<Simplex> facets;
  for (const auto& s : members) {
    bool covered = false;
    for (const auto& t : members)
      if (t.size() > s.size() && is_subset(s, t)) {
        covered = true;
        break;
      }
    if (!covered) facets.push_back(s);
  }
  return caches_->restriction.emplace(base, std::move(facets)).first->second;
}

const std::vector<Simplex>& Task::restriction_facets(const Simplex& base) const {
  std::lock_guard<std::mutex> lock(caches_->mutex);
  return restriction_facets_locked(base);
}

const std::vector<Simplex>& Task::link_facets(const Simplex& core, const Simplex& base) const {
  std::lock_guard<std::mutex> lock(caches_->mutex);
  const CacheKey key{core, base};
  auto it = caches_->link_facets.find(key);
  if (it != caches_->link_facets.end()) return it->second;

  if (!restriction_contains(core, base))
    throw ContractError("link core is not a simplex of the restricted subdivision");

  std::vector<Simplex> facets;
  for (const auto& f : restriction_facets_locked(base))
    if (is_subset(core, f)) {
      Simplex rest = simplex_difference(f, core);
      if (!rest.empty()) facets.push_back(std::move(rest));
    }
  facets = canonical_facets(std::move(facets));
  return caches_->link_facets.emplace(key, std::move(facets)).first->second;
}

const std::vector<VertexId>& Task::link_vertices(const Simplex& core, const Simplex& base) const {
  std::lock_guard<std::mutex> lock(caches_->mutex);
  const CacheKey key{core, base};
  auto it = caches_->link_vertices.find(key);
  if (it != caches_->link_vertices.end()) return it->second;

  std::vector<VertexId> vertices;
  for (VertexId v : by_label_)
    if (!simplex_contains(core, v) && link_contains({v}, core, base)) vertices.push_back(v);
  return caches_->link_vertices.emplace(key, std::move(vertices)).first->second;
}

VertexId Task::corner_vertex(VertexId base_vertex) const {
  if (base_vertex < 0 || base_vertex >= static_cast<VertexId>(corners_.size()))
    throw InputError("corner_vertex: base vertex out of range");
  return corners_[static_cast<std::size_t>(base_vertex)];
}

Complex Task::link_complex(const Simplex& core, const Simplex& base) const {
  return div_.result.with_facets(link_facets(core, base));
}

}  // namespace csa
