#include "csa/convergence.hpp"

#include <algorithm>

#include "csa/errors.hpp"

namespace csa {

const ChainClass& ChainResult::class_of(ProcessId p) const {
  for (const auto& cls : classes)
    for (ProcessId q : cls.members)
      if (q == p) return cls;
  throw InputError("process not present in chain-agreement result");
}

namespace {

/// Greedily extends `simplex` inside Lk(core, Div|base) in structural
/// label order until no vertex can be added.
Simplex greedy_extend(const Task& task, Simplex simplex, const Simplex& core,
                      const Simplex& base) {
  const auto& candidates = task.link_vertices(core, base);
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexId v : candidates) {
      if (simplex_contains(simplex, v)) continue;
      Simplex bigger = simplex_union(simplex, {v});
      if (task.link_contains(bigger, core, base)) {
        simplex = std::move(bigger);
        grew = true;
      }
    }
  }
  return simplex;
}

}  // namespace

ChainResult chain_agree(const Task& task, const std::vector<ChainInput>& inputs,
                        const std::vector<std::vector<ProcessId>>& classes) {
  if (inputs.empty() || classes.empty())
    throw InputError("chain_agree: empty input or class structure");

  std::size_t member_count = 0;
  for (const auto& members : classes) member_count += members.size();
  if (member_count != inputs.size())
    throw InputError("chain_agree: classes do not partition the inputs");
  for (const auto& in : inputs) {
    if (!task.restriction_contains(in.core, in.parts))
      throw InputError("chain_agree: a core reaches outside its participating carrier");
    if (!task.link_contains({in.start_vertex}, in.core, in.parts))
      throw InputError("chain_agree: a start vertex lies outside its link");
  }

  auto input_of = [&inputs](ProcessId p) -> const ChainInput& {
    for (const auto& in : inputs)
      if (in.process == p) return in;
    throw InputError("chain_agree: class member has no input");
  };

  ChainResult result;
  Simplex core_acc;       // intersection of cores over the prefix
  Simplex parts_acc;      // union of participating sets over the prefix
  bool first_class = true;
  Simplex current;        // output chain so far

  for (const auto& members : classes) {
    if (members.empty()) throw InputError("chain_agree: empty concurrency class");
    ChainClass cls;
    cls.members = members;
    for (ProcessId p : members) {
      const ChainInput& in = input_of(p);
      core_acc = first_class && p == members.front()
                     ? in.core
                     : simplex_intersection(core_acc, in.core);
      parts_acc = simplex_union(parts_acc, in.parts);
      cls.seeds.push_back(in.start_vertex);
    }
    std::sort(cls.seeds.begin(), cls.seeds.end());
    cls.core = core_acc;
    cls.parts = parts_acc;

    if (first_class) {
      if (members.size() == 1) {
        // a process running alone stays at its start vertex
        current = Simplex{cls.seeds.front()};
      } else {
        Simplex seeds(cls.seeds.begin(), cls.seeds.end());
        if (!task.link_contains(seeds, cls.core, cls.parts)) {
          // seeds mutually non-adjacent: fall back to the least seed by
          // structural label order
          VertexId least = seeds.front();
          for (VertexId v : seeds)
            if (task.label_rank(v) < task.label_rank(least)) least = v;
          seeds = Simplex{least};
        }
        current = greedy_extend(task, std::move(seeds), cls.core, cls.parts);
      }
      first_class = false;
    } else {
      current = greedy_extend(task, current, cls.core, cls.parts);
    }

    if (current.empty() || !task.link_contains(current, cls.core, cls.parts))
      throw ContractError("chain_agree produced an output outside its target link");
    cls.output = current;
    result.classes.push_back(std::move(cls));
  }
  return result;
}

Simplex compute_core(const std::vector<Simplex>& views) {
  if (views.empty()) throw InputError("compute_core: no views seen");
  Simplex core = views.front();
  for (std::size_t i = 1; i < views.size(); ++i)
    core = simplex_intersection(core, views[i]);
  return core;
}

Complex convergence_complex(const Task& task, const std::vector<Simplex>& cores,
                            const std::vector<Simplex>& parts) {
  if (cores.empty() || parts.empty())
    throw InputError("convergence_complex: empty core or participating family");
  Simplex core = cores.front();
  for (std::size_t i = 1; i < cores.size(); ++i) core = simplex_intersection(core, cores[i]);
  Simplex all_parts;
  for (const auto& p : parts) all_parts = simplex_union(all_parts, p);
  return task.link_complex(core, all_parts);
}

VertexId choose_start_vertex(const Task& task, const Simplex& core, const Simplex& parts,
                             int color) {
  for (VertexId v : task.link_vertices(core, parts))
    if (task.color_of(v) == color) return v;
  throw ContractError("no vertex of color " + std::to_string(color) +
                      " in the convergence complex");
}

std::optional<VertexId> decision_check(const Task& task,
                                       const std::vector<Simplex>& snap_simplexes, int color) {
  if (snap_simplexes.empty()) return std::nullopt;
  Simplex inter = snap_simplexes.front();
  for (std::size_t i = 1; i < snap_simplexes.size(); ++i)
    inter = simplex_intersection(inter, snap_simplexes[i]);
  std::optional<VertexId> hit;
  for (VertexId v : inter) {
    if (task.color_of(v) != color) continue;
    if (hit) throw ContractError("two vertices of one color in a snapshot intersection");
    hit = v;
  }
  return hit;
}

Simplex update_view(const Task& task, const std::vector<Simplex>& snap_simplexes,
                    const std::vector<Simplex>& snap_cores, int color) {
  if (snap_simplexes.empty()) throw InputError("update_view: empty snapshot");
  Simplex simplex_union_acc;
  for (const auto& s : snap_simplexes)
    simplex_union_acc = simplex_union(simplex_union_acc, s);
  Simplex view = simplex_union_acc;
  if (!snap_cores.empty()) {
    Simplex core_inter = snap_cores.front();
    for (std::size_t i = 1; i < snap_cores.size(); ++i)
      core_inter = simplex_intersection(core_inter, snap_cores[i]);
    view = simplex_union(view, core_inter);
  }
  Simplex toss;
  for (VertexId v : view)
    if (task.color_of(v) == color) toss.push_back(v);
  if (toss.size() > 1)
    throw ContractError("view update found several vertices of the process color");
  return simplex_difference(view, toss);
}

}  // namespace csa
