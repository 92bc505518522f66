#pragma once

// Fault injectors for the verifier self-test: each one mutates a healthy
// trace so that exactly its targeted verdict class is provably violated.
// Injections keep the trace structurally well formed; they may trip
// neighbouring verdicts too, but the targeted one must fail.

#include <functional>
#include <string>
#include <vector>

#include "csa/execution.hpp"
#include "csa/task.hpp"

namespace testsupport {

struct Injector {
  std::string verdict_id;
  std::function<void(csa::Trace&, const csa::Task&)> mutate;
};

/// A deterministic three-process execution with decisions spread over
/// rounds 1..3: every process runs solo at every site.
csa::Trace sequential_three_process_trace(const csa::Task& task);

/// One injector per verdict id, in verdict order.
std::vector<Injector> make_injectors();

}  // namespace testsupport
