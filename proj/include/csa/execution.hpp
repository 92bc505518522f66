#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csa/convergence.hpp"
#include "csa/errors.hpp"
#include "csa/task.hpp"

namespace csa {

/// Ordered partition of a pending process set: one block per concurrency
/// class, inner order irrelevant, block order significant.
struct OrderedPartition {
  std::vector<std::vector<ProcessId>> blocks;
  bool operator==(const OrderedPartition&) const = default;
};

/// Complete deterministic enumeration of the ordered partitions of a
/// nonempty process set. The result is cached per set.
const std::vector<OrderedPartition>& enumerate_ordered_partitions(
    const std::vector<ProcessId>& pending);

/// One write-then-snapshot round over an array of single-writer cells.
/// Blocks execute in order; inside a block every member writes, then
/// every member snapshots the cells written so far. Snapshots at one
/// array are therefore totally ordered by inclusion. Throws
/// ContractError on a double write.
template <typename T>
std::map<ProcessId, std::vector<std::pair<ProcessId, T>>> immediate_block(
    std::map<ProcessId, T>& cells, const std::map<ProcessId, T>& writes,
    const OrderedPartition& partition) {
  std::map<ProcessId, std::vector<std::pair<ProcessId, T>>> snapshots;
  for (const auto& block : partition.blocks) {
    for (ProcessId p : block) {
      if (cells.count(p)) throw ContractError("double write to an immediate-snapshot cell");
      cells.emplace(p, writes.at(p));
    }
    const std::vector<std::pair<ProcessId, T>> snap(cells.begin(), cells.end());
    for (ProcessId p : block) snapshots.emplace(p, snap);
  }
  return snapshots;
}

/// Adversary modes.
enum class ScheduleMode { Canonical, Random, Exhaustive, Explicit };

std::string to_string(ScheduleMode mode);

struct ScheduleChoice {
  int round = 0;
  std::string site;  // "agree", "simplexes", "views"
  OrderedPartition partition;
};

/// A schedule source hands an ordered partition of the pending set to
/// every synchronization site, in program order. Sources are stateful
/// over one run; `descriptor()` captures what a trace needs to replay.
class ScheduleSource {
 public:
  virtual ~ScheduleSource() = default;
  virtual OrderedPartition next(const std::vector<ProcessId>& pending) = 0;
  virtual ScheduleMode mode() const = 0;
};

/// Single-block partitions: everyone runs concurrently at every site.
class CanonicalSchedule : public ScheduleSource {
 public:
  OrderedPartition next(const std::vector<ProcessId>& pending) override;
  ScheduleMode mode() const override { return ScheduleMode::Canonical; }
};

/// Reproducible seeded choice, uniform over the ordered partitions of
/// each pending set. The generator is a self-contained splitmix64 so
/// replays are stable across toolchains.
class RandomSchedule : public ScheduleSource {
 public:
  explicit RandomSchedule(std::uint64_t seed) : state_(seed) {}
  OrderedPartition next(const std::vector<ProcessId>& pending) override;
  ScheduleMode mode() const override { return ScheduleMode::Random; }
  std::uint64_t next_u64();

 private:
  std::uint64_t state_;
};

/// Walks the full choice tree across runs: a run follows `path` while it
/// lasts and picks the first option beyond it, recording the branching
/// radix at every site so the caller can advance an odometer.
class CursorSchedule : public ScheduleSource {
 public:
  explicit CursorSchedule(std::vector<std::size_t> path) : path_(std::move(path)) {}
  OrderedPartition next(const std::vector<ProcessId>& pending) override;
  ScheduleMode mode() const override { return ScheduleMode::Exhaustive; }
  const std::vector<std::size_t>& taken() const { return taken_; }
  const std::vector<std::size_t>& radix() const { return radix_; }

 private:
  std::vector<std::size_t> path_;
  std::vector<std::size_t> taken_;
  std::vector<std::size_t> radix_;
};

/// Replays an explicit list of partitions; throws ContractError if a
/// partition does not cover the pending set or the list runs out (a
/// liveness violation surfaced to the caller).
class ExplicitSchedule : public ScheduleSource {
 public:
  explicit ExplicitSchedule(std::vector<OrderedPartition> partitions)
      : partitions_(std::move(partitions)) {}
  OrderedPartition next(const std::vector<ProcessId>& pending) override;
  ScheduleMode mode() const override { return ScheduleMode::Explicit; }

 private:
  std::vector<OrderedPartition> partitions_;
  std::size_t pos_ = 0;
};

/// Per-round record of one process, mirroring the protocol state.
struct RoundState {
  int round = 0;
  Simplex participating;           // simplex of the input complex
  Simplex core;                    // intersection of seen views
  Simplex refined_core;            // core refined inside chain agreement
  std::optional<VertexId> start_vertex;
  Simplex chosen;                  // simplex chosen by chain agreement
  Simplex view;                    // empty when the process decided
  std::optional<VertexId> decision;
};

struct SimplexCorePair {
  Simplex simplex;
  Simplex core;
  bool operator==(const SimplexCorePair&) const = default;
};

/// Full record of one execution.
struct Trace {
  std::string kind;                // subdivision kind of the task
  int iterations = 0;
  std::vector<ProcessId> participants;
  std::map<ProcessId, VertexId> inputs;  // base vertex per participant

  ScheduleMode mode = ScheduleMode::Canonical;
  std::uint64_t seed = 0;                  // random mode
  std::vector<std::size_t> cursor;         // exhaustive mode
  std::vector<ScheduleChoice> choices;     // partitions actually used

  std::map<ProcessId, std::vector<RoundState>> rounds;
  std::map<int, std::map<ProcessId, Simplex>> views_memory;          // round -> cells
  std::map<int, std::map<ProcessId, SimplexCorePair>> simplex_memory;  // round -> cells
  std::map<ProcessId, VertexId> decisions;
  int max_round = 0;

  const RoundState& state(ProcessId p, int round) const;
};

/// Drives every participating process through the protocol under the
/// given schedule until all decide. Inputs must lie on one simplex of
/// the task's input complex with colors matching the process ids.
/// Schedule exhaustion before termination and any protocol invariant
/// break surface as ContractError.
Trace run_execution(const Task& task, const std::map<ProcessId, VertexId>& inputs,
                    ScheduleSource& schedule);

/// Largest round count any execution may need: one decision per round.
int round_limit(std::size_t participant_count);

struct SweepOptions {
  bool include_subsets = true;  // crash coverage: proper participation subsets
  long max_runs = -1;           // cap; negative means unlimited
};

/// Exhaustive adversary sweep over every participation subset and every
/// schedule. The callback receives each finished trace.
long exhaustive_sweep(const Task& task, const std::map<ProcessId, VertexId>& inputs,
                      const SweepOptions& options, const std::function<void(Trace&&)>& sink);

/// Seeded random sweep of `count` runs. Each run draws its participation
/// subset (when enabled) and all partitions from a per-run seed derived
/// from `base_seed` and the run index.
long random_sweep(const Task& task, const std::map<ProcessId, VertexId>& inputs,
                  std::uint64_t base_seed, long count, const SweepOptions& options,
                  const std::function<void(Trace&&)>& sink);

/// Re-executes a trace from its recorded mode and seed or cursor.
Trace replay(const Task& task, const Trace& recorded);

}  // namespace csa
