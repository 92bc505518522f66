#pragma once

#include <stdexcept>
#include <string>

namespace csa {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: bad complex definitions, bad JSON, bad files.
struct InputError : Error {
  using Error::Error;
};

/// A task-level precondition does not hold (non-chromatic subdivision,
/// inputs off a simplex, unsupported subdivision kind).
struct TaskError : Error {
  using Error::Error;
};

/// A runtime invariant of the protocol or of a data structure was
/// violated. These are surfaced, never masked.
struct ContractError : Error {
  using Error::Error;
};

}  // namespace csa
