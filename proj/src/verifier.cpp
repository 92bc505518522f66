#include "csa/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "csa/errors.hpp"

namespace csa {

namespace {

std::string show(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

struct Checker {
  const Trace& trace;
  const Task& task;
  std::map<std::string, LemmaVerdict> verdicts;
  Simplex sigma_q;  // input simplex of all participants: the union of
                    // every participating set of the run

  Checker(const Trace& t, const Task& k) : trace(t), task(k) {
    for (const auto& id : verdict_ids()) verdicts.emplace(id, LemmaVerdict{id, true, ""});
    for (const auto& [p, v] : trace.inputs) sigma_q = simplex_union(sigma_q, {v});
  }

  void fail(const std::string& id, const std::string& witness) {
    LemmaVerdict& v = verdicts.at(id);
    if (v.pass) {
      v.pass = false;
      v.witness = witness;
    }
  }

  const OrderedPartition* choice(int round, const std::string& site) const {
    for (const auto& c : trace.choices)
      if (c.round == round && c.site == site) return &c.partition;
    return nullptr;
  }

  /// Link-complex inclusion: every facet of the first link is a member
  /// of the second.
  bool link_included(const Simplex& core_a, const Simplex& base_a, const Simplex& core_b,
                     const Simplex& base_b) const {
    for (const auto& f : task.link_facets(core_a, base_a))
      if (!task.link_contains(f, core_b, base_b)) return false;
    return true;
  }

  void check_l2() {
    for (const auto& [p, states] : trace.rounds) {
      for (const auto& rs : states) {
        // a view may reach beyond the process's own observed prefix (it
        // reflects the simplexes snapshot), so the scope is the union of
        // all participating sets
        auto member = [&](const Simplex& s) {
          return task.restriction_contains(s, sigma_q);
        };
        if (!member(rs.core))
          fail("L2-simplexes", "round " + std::to_string(rs.round) + " process " +
                                   std::to_string(p) + ": core " + show(rs.core) +
                                   " is not a simplex of the restriction");
        if (!member(rs.refined_core))
          fail("L2-simplexes", "round " + std::to_string(rs.round) + " process " +
                                   std::to_string(p) + ": refined core " +
                                   show(rs.refined_core) + " is not a simplex");
        if (!rs.decision && !member(rs.view))
          fail("L2-simplexes", "round " + std::to_string(rs.round) + " process " +
                                   std::to_string(p) + ": view " + show(rs.view) +
                                   " is not a simplex of the restriction");
      }
    }
  }

  void check_l3() {
    for (int r = 2; r <= trace.max_round; ++r) {
      std::vector<std::pair<ProcessId, const RoundState*>> active;
      for (const auto& [p, states] : trace.rounds)
        for (const auto& rs : states)
          if (rs.round == r) active.emplace_back(p, &rs);
      for (std::size_t i = 0; i < active.size(); ++i) {
        for (std::size_t j = i + 1; j < active.size(); ++j) {
          const RoundState& a = *active[i].second;
          const RoundState& b = *active[j].second;
          const bool ab = link_included(a.core, a.participating, b.core, b.participating);
          const bool ba = link_included(b.core, b.participating, a.core, a.participating);
          if (!ab && !ba)
            fail("L3-links", "round " + std::to_string(r) + ": convergence complexes of " +
                                 std::to_string(active[i].first) + " and " +
                                 std::to_string(active[j].first) +
                                 " are incomparable (cores " + show(a.core) + ", " +
                                 show(b.core) + ")");
        }
      }
    }
  }

  void check_l4() {
    for (const auto& [p, states] : trace.rounds) {
      for (const auto& rs : states) {
        bool found = false;
        for (VertexId v : task.link_vertices(rs.core, rs.participating))
          if (task.color_of(v) == p) {
            found = true;
            break;
          }
        if (!found) {
          fail("L4-vertex", "round " + std::to_string(rs.round) + " process " +
                                std::to_string(p) +
                                ": no vertex of its color in the convergence complex");
          continue;
        }
        if (!rs.start_vertex || task.color_of(*rs.start_vertex) != p ||
            !task.link_contains({*rs.start_vertex}, rs.core, rs.participating))
          fail("L4-vertex", "round " + std::to_string(rs.round) + " process " +
                                std::to_string(p) + ": recorded start vertex invalid");
      }
    }
  }

  void check_stable() {
    for (const auto& [p, states] : trace.rounds) {
      const RoundState& last = states.back();
      if (!last.decision) continue;
      const VertexId u = *last.decision;
      const int r0 = last.round;
      for (const auto& [q, qstates] : trace.rounds) {
        for (const auto& rs : qstates) {
          if (rs.round >= r0 && !rs.decision && !simplex_contains(rs.view, u))
            fail("L-stable", "decision " + std::to_string(u) + " of process " +
                                 std::to_string(p) + " missing from view of process " +
                                 std::to_string(q) + " in round " + std::to_string(rs.round));
          if (rs.round > r0) {
            if (!simplex_contains(rs.core, u) || !simplex_contains(rs.refined_core, u))
              fail("L-stable", "decision " + std::to_string(u) + " of process " +
                                   std::to_string(p) + " missing from a core of process " +
                                   std::to_string(q) + " in round " + std::to_string(rs.round));
          }
        }
      }
    }
  }

  void check_l5() {
    for (int r = 1; r <= trace.max_round; ++r) {
      const OrderedPartition* partition = choice(r, "agree");
      if (!partition) {
        fail("L5-contract", "round " + std::to_string(r) + ": no agree partition recorded");
        continue;
      }
      Simplex core_acc;
      Simplex parts_acc;
      Simplex previous_output;
      bool first = true;
      for (const auto& block : partition->blocks) {
        Simplex output;
        for (ProcessId p : block) {
          const RoundState& rs = trace.state(p, r);
          core_acc = (first && p == block.front())
                         ? rs.core
                         : simplex_intersection(core_acc, rs.core);
          parts_acc = simplex_union(parts_acc, rs.participating);
          if (output.empty())
            output = rs.chosen;
          else if (output != rs.chosen)
            fail("L5-contract", "round " + std::to_string(r) +
                                    ": members of one class chose different simplexes");
        }
        for (ProcessId p : block) {
          const RoundState& rs = trace.state(p, r);
          if (rs.refined_core != core_acc)
            fail("L5-contract", "round " + std::to_string(r) + " process " +
                                    std::to_string(p) +
                                    ": refined core is not the prefix intersection");
        }
        if (output.empty()) {
          fail("L5-contract", "round " + std::to_string(r) + ": empty class output");
          continue;
        }
        if (!task.link_contains(output, core_acc, parts_acc))
          fail("L5-contract", "round " + std::to_string(r) + ": class output " +
                                  show(output) + " lies outside its target link");
        if (!first && !is_subset(previous_output, output))
          fail("L5-contract",
               "round " + std::to_string(r) + ": outputs are not nested (" +
                   show(previous_output) + " then " + show(output) + ")");
        if (first && block.size() == 1) {
          const RoundState& rs = trace.state(block.front(), r);
          if (!rs.start_vertex || output != Simplex{*rs.start_vertex})
            fail("L5-contract", "round " + std::to_string(r) +
                                    ": a solo first class moved off its start vertex");
        }
        previous_output = output;
        first = false;
      }
    }
  }

  void check_liveness() {
    std::map<int, int> decisions_per_round;
    for (const auto& [p, states] : trace.rounds)
      if (states.back().decision) decisions_per_round[states.back().round] += 1;
    for (int r = 1; r <= trace.max_round; ++r)
      if (decisions_per_round[r] == 0)
        fail("T-liveness", "round " + std::to_string(r) + " produced no decision");
    const int limit = round_limit(trace.participants.size());
    if (trace.max_round > limit)
      fail("T-liveness", "execution used " + std::to_string(trace.max_round) +
                             " rounds, above the bound " + std::to_string(limit));
  }

  void check_safety() {
    Simplex sigma_p;
    for (const auto& [p, v] : trace.inputs) sigma_p = simplex_union(sigma_p, {v});
    Simplex decided;
    for (int r = 1; r <= trace.max_round; ++r) {
      for (const auto& [p, states] : trace.rounds)
        for (const auto& rs : states)
          if (rs.round == r && rs.decision)
            decided = simplex_union(decided, {*rs.decision});
      if (!task.restriction_contains(decided, sigma_p))
        fail("T-safety", "decided set " + show(decided) + " after round " +
                             std::to_string(r) +
                             " is not a simplex of the participants' subdivision");
    }
  }

  void check_chromatic() {
    for (const auto& [p, u] : trace.decisions)
      if (task.color_of(u) != p)
        fail("chromatic-output", "process " + std::to_string(p) + " decided vertex " +
                                     std::to_string(u) + " of color " +
                                     std::to_string(task.color_of(u)));
  }

  void check_carrier() {
    for (const auto& [p, states] : trace.rounds) {
      const RoundState& last = states.back();
      if (!last.decision) continue;
      // the carrier the process had observed when it decided
      if (!task.restriction_contains({*last.decision}, last.participating))
        fail("carrier-output", "process " + std::to_string(p) + " decided " +
                                   std::to_string(*last.decision) +
                                   " outside the subdivision of its observed carrier " +
                                   show(last.participating));
    }
  }
};

}  // namespace

const LemmaVerdict& TraceReport::verdict(const std::string& id) const {
  for (const auto& v : verdicts)
    if (v.id == id) return v;
  throw InputError("unknown verdict id: " + id);
}

TraceReport check_trace(const Trace& trace, const Task& task) {
  if (trace.kind != task.kind() || trace.iterations != task.iterations())
    throw InputError("check_trace: trace was produced for a different task (" + trace.kind +
                     "^" + std::to_string(trace.iterations) + ")");
  for (ProcessId p : trace.participants) {
    auto it = trace.rounds.find(p);
    if (it == trace.rounds.end() || it->second.empty() || !it->second.back().decision ||
        !trace.decisions.count(p))
      throw InputError("check_trace: incomplete trace, process " + std::to_string(p) +
                       " never decided");
  }

  Checker checker(trace, task);
  checker.check_l2();
  checker.check_l3();
  checker.check_l4();
  checker.check_stable();
  checker.check_l5();
  checker.check_liveness();
  checker.check_safety();
  checker.check_chromatic();
  checker.check_carrier();

  TraceReport report;
  report.rounds_used = trace.max_round;
  for (const auto& id : verdict_ids()) {
    report.verdicts.push_back(checker.verdicts.at(id));
    report.all_pass = report.all_pass && checker.verdicts.at(id).pass;
  }
  return report;
}

std::string schedule_key(const Trace& trace) {
  std::ostringstream out;
  out << to_string(trace.mode);
  for (const auto& choice : trace.choices) {
    out << "|" << choice.round << choice.site[0];
    for (const auto& block : choice.partition.blocks) {
      out << ":";
      for (ProcessId p : block) out << p;
    }
  }
  return out.str();
}

void SweepAccumulator::add(const Trace& trace, const TraceReport& report) {
  report_.runs += 1;
  report_.max_rounds = std::max(report_.max_rounds, report.rounds_used);
  if (!report.all_pass) {
    report_.failures += 1;
    for (const auto& v : report.verdicts) {
      if (v.pass) continue;
      report_.verdict_failures[v.id] += 1;
      if (report_.failure_witnesses.size() < witness_cap_)
        report_.failure_witnesses.push_back(v.id + ": " + v.witness);
    }
  }
  if (keep_decision_map_)
    report_.decision_map.push_back({trace.participants, schedule_key(trace), trace.decisions});
}

SweepReport check_sweep(const std::vector<Trace>& traces, const Task& task) {
  SweepAccumulator acc;
  for (const auto& trace : traces) acc.add(trace, check_trace(trace, task));
  return acc.finish();
}

}  // namespace csa
