#pragma once

#include <map>
#include <string>
#include <vector>

#include "csa/execution.hpp"

namespace csa {

/// Verdict ids, one per checked statement:
///   L2-simplexes     every recorded view and core is a simplex of the
///                    subdivision restricted to the observed carrier
///   L3-links         per round, convergence complexes are totally
///                    ordered by inclusion
///   L4-vertex        every undecided process finds a start vertex of
///                    its own color in its convergence complex
///   L-stable         decided vertices stay inside every later view and
///                    core
///   L5-contract      every chain-agreement block produced a nested,
///                    nonempty chain inside the correct link, with
///                    singleton first classes staying put
///   T-liveness       at least one decision per round; rounds bounded by
///                    the participant count
///   T-safety         the running decided set is a simplex of the
///                    subdivision of the participants' carrier at every
///                    round boundary
///   chromatic-output decisions carry their process's color
///   carrier-output   each decision lies in the subdivision of the
///                    carrier its process had observed when it decided
struct LemmaVerdict {
  std::string id;
  bool pass = true;
  std::string witness;  // nonempty on failure: round/process/sets involved
};

inline const std::vector<std::string>& verdict_ids() {
  static const std::vector<std::string> ids = {
      "L2-simplexes", "L3-links",   "L4-vertex",        "L-stable",      "L5-contract",
      "T-liveness",   "T-safety",   "chromatic-output", "carrier-output"};
  return ids;
}

struct TraceReport {
  std::vector<LemmaVerdict> verdicts;
  bool all_pass = true;
  int rounds_used = 0;
  const LemmaVerdict& verdict(const std::string& id) const;
};

/// Evaluates every verdict against a completed trace. Throws InputError
/// when the trace is incomplete (some participant never decided).
TraceReport check_trace(const Trace& trace, const Task& task);

struct DecisionMapEntry {
  std::vector<ProcessId> participants;
  std::string schedule_key;             // compact rendering of the choices
  std::map<ProcessId, VertexId> decisions;
};

struct SweepReport {
  long runs = 0;
  long failures = 0;
  int max_rounds = 0;
  std::map<std::string, long> verdict_failures;  // id -> failing runs
  std::vector<std::string> failure_witnesses;    // capped sample
  std::vector<DecisionMapEntry> decision_map;
};

/// Streaming aggregation for large sweeps.
class SweepAccumulator {
 public:
  explicit SweepAccumulator(bool keep_decision_map = true, std::size_t witness_cap = 16)
      : keep_decision_map_(keep_decision_map), witness_cap_(witness_cap) {}
  void add(const Trace& trace, const TraceReport& report);
  SweepReport finish() const { return report_; }

 private:
  bool keep_decision_map_;
  std::size_t witness_cap_;
  SweepReport report_;
};

SweepReport check_sweep(const std::vector<Trace>& traces, const Task& task);

std::string schedule_key(const Trace& trace);

}  // namespace csa
