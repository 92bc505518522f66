#include "csa/execution.hpp"

#include <algorithm>
#include <set>

#include "csa/errors.hpp"

namespace csa {

namespace {

void enumerate_partitions_rec(const std::vector<ProcessId>& pending,
                              std::vector<std::vector<ProcessId>>& current,
                              std::vector<OrderedPartition>& out) {
  if (pending.empty()) {
    out.push_back({current});
    return;
  }
  const std::size_t k = pending.size();
  for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
    std::vector<ProcessId> block;
    std::vector<ProcessId> rest;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1ull << i))
        block.push_back(pending[i]);
      else
        rest.push_back(pending[i]);
    }
    current.push_back(std::move(block));
    enumerate_partitions_rec(rest, current, out);
    current.pop_back();
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t s = base ^ (salt * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
  return splitmix64(s);
}

}  // namespace

const std::vector<OrderedPartition>& enumerate_ordered_partitions(
    const std::vector<ProcessId>& pending) {
  if (pending.empty())
    throw InputError("enumerate_ordered_partitions: empty process set");
  if (pending.size() > 8)
    throw InputError("ordered-partition enumeration is limited to 8 processes");
  static std::map<std::vector<ProcessId>, std::vector<OrderedPartition>> cache;
  auto sorted = pending;
  std::sort(sorted.begin(), sorted.end());
  auto it = cache.find(sorted);
  if (it != cache.end()) return it->second;
  std::vector<OrderedPartition> out;
  std::vector<std::vector<ProcessId>> current;
  enumerate_partitions_rec(sorted, current, out);
  return cache.emplace(std::move(sorted), std::move(out)).first->second;
}

std::string to_string(ScheduleMode mode) {
  switch (mode) {
    case ScheduleMode::Canonical: return "canonical";
    case ScheduleMode::Random: return "random";
    case ScheduleMode::Exhaustive: return "exhaustive";
    case ScheduleMode::Explicit: return "explicit";
  }
  return "unknown";
}

OrderedPartition CanonicalSchedule::next(const std::vector<ProcessId>& pending) {
  auto sorted = pending;
  std::sort(sorted.begin(), sorted.end());
  return OrderedPartition{{std::move(sorted)}};
}

std::uint64_t RandomSchedule::next_u64() { return splitmix64(state_); }

OrderedPartition RandomSchedule::next(const std::vector<ProcessId>& pending) {
  const auto& options = enumerate_ordered_partitions(pending);
  return options[static_cast<std::size_t>(next_u64() % options.size())];
}

OrderedPartition CursorSchedule::next(const std::vector<ProcessId>& pending) {
  const auto& options = enumerate_ordered_partitions(pending);
  const std::size_t site = taken_.size();
  const std::size_t idx = site < path_.size() ? path_[site] : 0;
  if (idx >= options.size())
    throw ContractError("exhaustive cursor points past the choice radix");
  taken_.push_back(idx);
  radix_.push_back(options.size());
  return options[idx];
}

OrderedPartition ExplicitSchedule::next(const std::vector<ProcessId>& pending) {
  if (pos_ >= partitions_.size())
    throw ContractError("schedule exhausted before all processes decided");
  const OrderedPartition& partition = partitions_[pos_++];
  std::vector<ProcessId> covered;
  for (const auto& block : partition.blocks)
    covered.insert(covered.end(), block.begin(), block.end());
  std::sort(covered.begin(), covered.end());
  auto sorted = pending;
  std::sort(sorted.begin(), sorted.end());
  if (covered != sorted)
    throw ContractError("explicit schedule partition does not cover the pending set");
  return partition;
}

const RoundState& Trace::state(ProcessId p, int round) const {
  const auto it = rounds.find(p);
  if (it == rounds.end()) throw InputError("trace has no rounds for the process");
  for (const auto& rs : it->second)
    if (rs.round == round) return rs;
  throw InputError("trace has no state for the requested round");
}

int round_limit(std::size_t participant_count) {
  return static_cast<int>(participant_count);
}

namespace {

/// Validates the partition handed back by a schedule source and logs it.
OrderedPartition take_partition(ScheduleSource& schedule, const std::vector<ProcessId>& pending,
                                int round, const char* site, Trace& trace) {
  OrderedPartition partition = schedule.next(pending);
  std::set<ProcessId> seen;
  std::size_t total = 0;
  for (const auto& block : partition.blocks) {
    if (block.empty()) throw ContractError("schedule produced an empty concurrency class");
    for (ProcessId p : block) {
      if (!seen.insert(p).second)
        throw ContractError("schedule repeats a process inside one partition");
      ++total;
    }
  }
  if (total != pending.size() ||
      !std::all_of(pending.begin(), pending.end(),
                   [&seen](ProcessId p) { return seen.count(p) > 0; }))
    throw ContractError("schedule partition does not cover the pending set");
  trace.choices.push_back({round, site, partition});
  return partition;
}

}  // namespace

Trace run_execution(const Task& task, const std::map<ProcessId, VertexId>& inputs,
                    ScheduleSource& schedule) {
  if (inputs.empty()) throw TaskError("run_execution: no participants");

  Trace trace;
  trace.kind = task.kind();
  trace.iterations = task.iterations();
  trace.inputs = inputs;
  trace.mode = schedule.mode();

  Simplex input_simplex;
  for (const auto& [p, v] : inputs) {
    trace.participants.push_back(p);
    if (task.input().vertex(v).color != p)
      throw TaskError("input vertex color does not match its process");
    input_simplex = simplex_union(input_simplex, {v});
  }
  if (!task.input().contains(input_simplex))
    throw TaskError("inputs do not lie on a simplex of the input complex");

  std::vector<ProcessId> undecided = trace.participants;
  std::map<ProcessId, Simplex> views;  // view carried into the next round

  // ---- round 1: chain agreement over the carriers of the seen inputs
  {
    const OrderedPartition agree = take_partition(schedule, undecided, 1, "agree", trace);
    std::vector<ChainInput> chain_inputs;
    for (ProcessId p : undecided)
      chain_inputs.push_back({p, task.corner_vertex(inputs.at(p)), {}, {inputs.at(p)}});
    const ChainResult chain = chain_agree(task, chain_inputs, agree.blocks);

    std::map<ProcessId, SimplexCorePair> writes;
    std::map<ProcessId, RoundState> states;
    for (ProcessId p : undecided) {
      const ChainClass& cls = chain.class_of(p);
      writes.emplace(p, SimplexCorePair{cls.output, {}});
      RoundState rs;
      rs.round = 1;
      rs.participating = cls.parts;
      rs.refined_core = cls.core;
      rs.start_vertex = task.corner_vertex(inputs.at(p));
      rs.chosen = cls.output;
      states.emplace(p, std::move(rs));
    }

    const OrderedPartition sim = take_partition(schedule, undecided, 1, "simplexes", trace);
    auto snapshots = immediate_block(trace.simplex_memory[1], writes, sim);

    std::vector<ProcessId> still;
    for (ProcessId p : undecided) {
      RoundState& rs = states.at(p);
      std::vector<Simplex> snap_simplexes;
      std::vector<Simplex> snap_cores;
      for (const auto& [q, pair] : snapshots.at(p)) {
        snap_simplexes.push_back(pair.simplex);
        snap_cores.push_back(pair.core);
      }
      if (auto u = decision_check(task, snap_simplexes, p)) {
        rs.decision = *u;
        trace.decisions.emplace(p, *u);
      } else {
        rs.view = update_view(task, snap_simplexes, snap_cores, p);
        if (!task.restriction_contains(rs.view, input_simplex))
          throw ContractError("computed view is not a simplex of the restricted subdivision");
        views[p] = rs.view;
        still.push_back(p);
      }
      trace.rounds[p].push_back(std::move(rs));
    }
    trace.max_round = 1;
    undecided = std::move(still);
  }

  // ---- rounds 2..: views, link agreement, simplexes
  int round = 2;
  while (!undecided.empty()) {
    if (round > round_limit(trace.participants.size()) + 1)
      throw ContractError("liveness violated: round limit exceeded");

    const OrderedPartition viewp = take_partition(schedule, undecided, round, "views", trace);
    std::map<ProcessId, Simplex> view_writes;
    for (ProcessId p : undecided) view_writes.emplace(p, views.at(p));
    auto view_snaps = immediate_block(trace.views_memory[round], view_writes, viewp);

    // every participant registered in round 1, so the participating
    // snapshot taken with the view write sees them all
    const Simplex participating = input_simplex;

    std::map<ProcessId, RoundState> states;
    std::vector<ChainInput> chain_inputs;
    for (ProcessId p : undecided) {
      RoundState rs;
      rs.round = round;
      rs.participating = participating;
      std::vector<Simplex> seen;
      for (const auto& [q, view] : view_snaps.at(p)) seen.push_back(view);
      rs.core = compute_core(seen);
      rs.start_vertex = choose_start_vertex(task, rs.core, participating, p);
      chain_inputs.push_back({p, *rs.start_vertex, rs.core, participating});
      states.emplace(p, std::move(rs));
    }

    const OrderedPartition agree = take_partition(schedule, undecided, round, "agree", trace);
    const ChainResult chain = chain_agree(task, chain_inputs, agree.blocks);

    std::map<ProcessId, SimplexCorePair> writes;
    for (ProcessId p : undecided) {
      const ChainClass& cls = chain.class_of(p);
      RoundState& rs = states.at(p);
      rs.refined_core = cls.core;
      rs.chosen = cls.output;
      writes.emplace(p, SimplexCorePair{cls.output, cls.core});
    }

    const OrderedPartition sim = take_partition(schedule, undecided, round, "simplexes", trace);
    auto snapshots = immediate_block(trace.simplex_memory[round], writes, sim);

    std::vector<ProcessId> still;
    for (ProcessId p : undecided) {
      RoundState& rs = states.at(p);
      std::vector<Simplex> snap_simplexes;
      std::vector<Simplex> snap_cores;
      for (const auto& [q, pair] : snapshots.at(p)) {
        snap_simplexes.push_back(pair.simplex);
        snap_cores.push_back(pair.core);
      }
      if (auto u = decision_check(task, snap_simplexes, p)) {
        rs.decision = *u;
        trace.decisions.emplace(p, *u);
      } else {
        rs.view = update_view(task, snap_simplexes, snap_cores, p);
        if (!task.restriction_contains(rs.view, input_simplex))
          throw ContractError("computed view is not a simplex of the restricted subdivision");
        views[p] = rs.view;
        still.push_back(p);
      }
      trace.rounds[p].push_back(std::move(rs));
    }
    trace.max_round = round;
    undecided = std::move(still);
    ++round;
  }
  return trace;
}

namespace {

std::map<ProcessId, VertexId> restrict_inputs(const std::map<ProcessId, VertexId>& inputs,
                                              std::uint64_t mask,
                                              const std::vector<ProcessId>& order) {
  std::map<ProcessId, VertexId> out;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (mask & (1ull << i)) out.emplace(order[i], inputs.at(order[i]));
  return out;
}

}  // namespace

long exhaustive_sweep(const Task& task, const std::map<ProcessId, VertexId>& inputs,
                      const SweepOptions& options, const std::function<void(Trace&&)>& sink) {
  std::vector<ProcessId> order;
  for (const auto& [p, v] : inputs) order.push_back(p);
  const std::uint64_t full = (1ull << order.size()) - 1;
  long runs = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (!options.include_subsets && mask != full) continue;
    const auto sub_inputs = restrict_inputs(inputs, mask, order);
    std::vector<std::size_t> path;
    while (true) {
      if (options.max_runs >= 0 && runs >= options.max_runs) return runs;
      CursorSchedule schedule(path);
      Trace trace = run_execution(task, sub_inputs, schedule);
      trace.cursor = schedule.taken();
      const auto taken = schedule.taken();
      const auto radix = schedule.radix();
      sink(std::move(trace));
      ++runs;
      // advance the odometer over the recorded radixes
      std::size_t i = taken.size();
      while (i > 0 && taken[i - 1] + 1 >= radix[i - 1]) --i;
      if (i == 0) break;
      path.assign(taken.begin(), taken.begin() + static_cast<long>(i));
      path[i - 1] += 1;
    }
  }
  return runs;
}

long random_sweep(const Task& task, const std::map<ProcessId, VertexId>& inputs,
                  std::uint64_t base_seed, long count, const SweepOptions& options,
                  const std::function<void(Trace&&)>& sink) {
  std::vector<ProcessId> order;
  for (const auto& [p, v] : inputs) order.push_back(p);
  const std::uint64_t full = (1ull << order.size()) - 1;
  long runs = 0;
  for (long i = 0; i < count; ++i) {
    if (options.max_runs >= 0 && runs >= options.max_runs) break;
    const std::uint64_t run_seed = mix_seed(base_seed, static_cast<std::uint64_t>(i));
    std::uint64_t mask = full;
    if (options.include_subsets) {
      // participation drawn from a separate stream so the schedule can be
      // replayed from the run seed alone
      std::uint64_t subset_state = mix_seed(run_seed, 0x5eed5eedull);
      mask = 1 + splitmix64(subset_state) % full;
    }
    RandomSchedule schedule(run_seed);
    Trace trace = run_execution(task, restrict_inputs(inputs, mask, order), schedule);
    trace.seed = run_seed;
    sink(std::move(trace));
    ++runs;
  }
  return runs;
}

Trace replay(const Task& task, const Trace& recorded) {
  Trace out;
  switch (recorded.mode) {
    case ScheduleMode::Canonical: {
      CanonicalSchedule schedule;
      out = run_execution(task, recorded.inputs, schedule);
      break;
    }
    case ScheduleMode::Random: {
      RandomSchedule schedule(recorded.seed);
      out = run_execution(task, recorded.inputs, schedule);
      out.seed = recorded.seed;
      break;
    }
    case ScheduleMode::Exhaustive: {
      CursorSchedule schedule(recorded.cursor);
      out = run_execution(task, recorded.inputs, schedule);
      out.cursor = schedule.taken();
      break;
    }
    case ScheduleMode::Explicit: {
      std::vector<OrderedPartition> partitions;
      for (const auto& choice : recorded.choices) partitions.push_back(choice.partition);
      ExplicitSchedule schedule(std::move(partitions));
      out = run_execution(task, recorded.inputs, schedule);
      break;
    }
  }
  return out;
}

}  // namespace csa
