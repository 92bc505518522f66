#pragma once

#include <string>

#include <json.hpp>

#include "csa/execution.hpp"
#include "csa/homology.hpp"
#include "csa/subdivision.hpp"
#include "csa/task.hpp"
#include "csa/verifier.hpp"

namespace csa {

using Json = nlohmann::json;

/// Canonical rendering: sorted object keys (the library default),
/// two-space indent, trailing newline. Byte-identical for equal values.
std::string canonical_dump(const Json& j);

Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j);

/// Sidecar carrier table listing the carrier of every result vertex and
/// every result facet.
Json carrier_table_to_json(const Subdivision& sub);

Json task_to_json(const Task& task);
Task task_from_json(const Json& j);

Json trace_to_json(const Trace& trace);
Trace trace_from_json(const Json& j);

Json trace_report_to_json(const TraceReport& report);
Json sweep_report_to_json(const SweepReport& report);
Json connectivity_report_to_json(const ConnectivityReport& report);

Json load_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace csa
