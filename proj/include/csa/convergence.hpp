#pragma once

#include <optional>
#include <vector>

#include "csa/task.hpp"

namespace csa {

using ProcessId = int;

/// One process's input to a chain-agreement block: the vertex it starts
/// from, its current core, and the participating set it has observed
/// (as a simplex of the task's input complex). The core's carrier must
/// lie inside the participating simplex and the start vertex must lie in
/// the link of the core over it.
struct ChainInput {
  ProcessId process = -1;
  VertexId start_vertex = -1;
  Simplex core;   // simplex of Div, possibly empty
  Simplex parts;  // simplex of the input complex
};

/// Per concurrency class record of a chain-agreement block. `core` and
/// `parts` aggregate the class prefix: the intersection of cores and the
/// union of participating sets seen so far.
struct ChainClass {
  std::vector<ProcessId> members;
  Simplex core;             // refined core handed to the members
  Simplex parts;            // carrier the target link lives over
  std::vector<VertexId> seeds;
  Simplex output;           // the simplex chosen for this class
};

struct ChainResult {
  std::vector<ChainClass> classes;
  const ChainClass& class_of(ProcessId p) const;
};

/// Runs one chain-agreement block over inclusion-ordered concurrency
/// classes. The target complex of a class prefix S is
/// Lk(intersection of cores in S, Div restricted to the union of
/// participating sets in S); outputs form a chain, each inside its
/// class's target complex. A minimal singleton class keeps exactly its
/// start vertex; otherwise the class seeds are extended greedily in
/// structural label order. Non-adjacent seeds fall back to the least
/// seed alone.
ChainResult chain_agree(const Task& task, const std::vector<ChainInput>& inputs,
                        const std::vector<std::vector<ProcessId>>& classes);

/// Intersection of the views seen in a snapshot; the empty simplex is a
/// legal result. Throws InputError when no views were seen.
Simplex compute_core(const std::vector<Simplex>& views);

/// The convergence complex Lk(core of the intersected cores, Div
/// restricted to the union of participating sets), as a complex over the
/// Div vertex table. An empty core yields the whole restriction.
Complex convergence_complex(const Task& task, const std::vector<Simplex>& cores,
                            const std::vector<Simplex>& parts);

/// Deterministic choice: the least vertex, in structural label order, of
/// the given color in Lk(core, Div restricted to parts). Throws
/// ContractError when no such vertex exists; callers surface this as a
/// protocol violation.
VertexId choose_start_vertex(const Task& task, const Simplex& core, const Simplex& parts,
                             int color);

/// The own-color vertex of the intersection of the seen simplexes, if
/// any. Throws ContractError if the intersection holds two vertices of
/// the color, which a properly colored complex forbids.
std::optional<VertexId> decision_check(const Task& task,
                                       const std::vector<Simplex>& snap_simplexes, int color);

/// View update: union of seen simplexes, union the intersection of the
/// seen refined cores, minus the own-color vertex. Round 1 passes empty
/// cores, reducing to union minus own color. Throws ContractError when
/// more than one own-color vertex appears.
Simplex update_view(const Task& task, const std::vector<Simplex>& snap_simplexes,
                    const std::vector<Simplex>& snap_cores, int color);

}  // namespace csa
