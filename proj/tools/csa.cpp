// Command-line front end: subdivision construction, homology reports,
// protocol sweeps, and trace verification over the shared JSON formats.
//
// Exit codes: 0 success; 1 failing verdicts (verify); 2 usage errors;
// 3 malformed input files; 4 task-level errors; 5 internal invariant
// violations.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "csa/json_io.hpp"
#include "csa/version.hpp"

namespace fs = std::filesystem;
using namespace csa;

namespace {

constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitTask = 4;
constexpr int kExitContract = 5;

std::map<ProcessId, VertexId> parse_inputs(const std::string& spec) {
  // "0:3,1:5,2:7" -> process 0 starts on vertex 3, ...
  std::map<ProcessId, VertexId> inputs;
  std::istringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw InputError("bad --inputs entry '" + item + "', expected process:vertex");
    try {
      const ProcessId p = std::stoi(item.substr(0, colon));
      const VertexId v = std::stoi(item.substr(colon + 1));
      if (!inputs.emplace(p, v).second)
        throw InputError("process " + std::to_string(p) + " listed twice in --inputs");
    } catch (const std::invalid_argument&) {
      throw InputError("bad --inputs entry '" + item + "'");
    }
  }
  if (inputs.empty()) throw InputError("--inputs is empty");
  return inputs;
}

std::string sidecar_path(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() && out.substr(out.size() - suffix.size()) == suffix)
    return out.substr(0, out.size() - suffix.size()) + ".carriers.json";
  return out + ".carriers.json";
}

int cmd_subdivide(const std::string& complex_path, const std::string& kind, int iterations,
                  const std::string& out_path) {
  const Complex base = complex_from_json(load_json_file(complex_path));
  Subdivision sub;
  if (kind == "ch")
    sub = iterate_ch(base, iterations);
  else if (kind == "bary")
    sub = iterate_bary(base, iterations);
  else
    throw TaskError("unknown subdivision kind '" + kind + "', expected ch or bary");
  write_file(out_path, canonical_dump(complex_to_json(sub.result)));
  write_file(sidecar_path(out_path), canonical_dump(carrier_table_to_json(sub)));
  std::cout << "wrote " << out_path << " (" << sub.result.vertex_table().size()
            << " vertices, " << sub.result.facets().size() << " facets) and "
            << sidecar_path(out_path) << "\n";
  return 0;
}

int cmd_homology(const std::string& complex_path, bool links) {
  const Complex c = complex_from_json(load_json_file(complex_path));
  if (links) {
    const ConnectivityReport report = check_link_connected(c);
    std::cout << canonical_dump(connectivity_report_to_json(report));
    return report.pass ? 0 : kExitVerdictFailure;
  }
  Json out{{"betti", Json(betti_gf2(c))}, {"version", kVersion}};
  std::cout << canonical_dump(out);
  return 0;
}

int cmd_converge(const std::string& complex_path, const std::string& kind, int iterations,
                 const std::string& inputs_spec, const std::string& schedule_mode,
                 std::uint64_t seed, long max_runs, const std::string& trace_dir,
                 bool no_subsets) {
  if (kind != "ch")
    throw TaskError("the convergence task needs a chromatic subdivision (--subdivision ch)");
  const Task task = Task::make_ch(complex_from_json(load_json_file(complex_path)), iterations);
  const auto inputs = parse_inputs(inputs_spec);

  fs::create_directories(trace_dir);
  write_file((fs::path(trace_dir) / "task.json").string(), canonical_dump(task_to_json(task)));

  long written = 0;
  int max_rounds = 0;
  auto sink = [&](Trace&& trace) {
    std::ostringstream name;
    name << "run_" << std::setw(6) << std::setfill('0') << written << ".json";
    write_file((fs::path(trace_dir) / name.str()).string(),
               canonical_dump(trace_to_json(trace)));
    max_rounds = std::max(max_rounds, trace.max_round);
    ++written;
  };

  SweepOptions options;
  options.include_subsets = !no_subsets;
  options.max_runs = max_runs;
  if (schedule_mode == "canonical") {
    CanonicalSchedule schedule;
    sink(run_execution(task, inputs, schedule));
  } else if (schedule_mode == "exhaustive") {
    exhaustive_sweep(task, inputs, options, sink);
  } else if (schedule_mode == "random") {
    const long count = max_runs >= 0 ? max_runs : 1000;
    random_sweep(task, inputs, seed, count, options, sink);
  } else {
    throw TaskError("unknown schedule mode '" + schedule_mode + "'");
  }

  Json summary{{"runs", written},
               {"max_rounds", max_rounds},
               {"schedule", schedule_mode},
               {"seed", seed},
               {"version", kVersion}};
  write_file((fs::path(trace_dir) / "sweep_summary.json").string(), canonical_dump(summary));
  std::cout << "wrote " << written << " trace(s) to " << trace_dir << ", max rounds "
            << max_rounds << "\n";
  return 0;
}

int cmd_verify(const std::string& trace_dir, const std::string& task_path,
               const std::string& report_path) {
  const Task task = task_from_json(load_json_file(task_path));
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(trace_dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("run_", 0) == 0 && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  SweepAccumulator acc;
  for (const auto& file : files) {
    const Trace trace = trace_from_json(load_json_file(file.string()));
    acc.add(trace, check_trace(trace, task));
  }
  const SweepReport report = acc.finish();
  if (!report_path.empty())
    write_file(report_path, canonical_dump(sweep_report_to_json(report)));
  std::cout << report.runs << " trace(s), " << report.failures << " failing, max rounds "
            << report.max_rounds << "\n";
  for (const auto& witness : report.failure_witnesses) std::cout << "  " << witness << "\n";
  return report.failures == 0 ? 0 : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic simplex agreement toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* subdivide = app.add_subcommand("subdivide", "subdivide a complex");
  std::string sd_complex, sd_kind = "ch", sd_out = "out.json";
  int sd_iterations = 1;
  subdivide->add_option("--complex", sd_complex, "input complex JSON")->required();
  subdivide->add_option("--kind", sd_kind, "ch or bary");
  subdivide->add_option("--iterations", sd_iterations, "iteration count (default 1)");
  subdivide->add_option("--out", sd_out, "output complex JSON path");

  auto* homology = app.add_subcommand("homology", "reduced GF(2) Betti numbers");
  std::string hm_complex;
  bool hm_links = false;
  homology->add_option("--complex", hm_complex, "input complex JSON")->required();
  homology->add_flag("--links", hm_links, "also check link-connectivity");

  auto* converge = app.add_subcommand("converge", "run protocol executions");
  std::string cv_complex, cv_kind = "ch", cv_inputs, cv_schedule = "canonical",
              cv_trace_dir = "traces";
  int cv_iterations = 1;
  std::uint64_t cv_seed = 0;
  long cv_max_runs = -1;
  bool cv_no_subsets = false;
  converge->add_option("--complex", cv_complex, "input complex JSON")->required();
  converge->add_option("--subdivision", cv_kind, "subdivision kind (ch)");
  converge->add_option("--iterations", cv_iterations, "subdivision iterations");
  converge->add_option("--inputs", cv_inputs, "process:vertex list, e.g. 0:0,1:1")->required();
  converge->add_option("--schedule", cv_schedule, "exhaustive | random | canonical");
  converge->add_option("--seed", cv_seed, "base seed for random schedules");
  converge->add_option("--max-runs", cv_max_runs, "cap on the number of runs");
  converge->add_option("--trace-out", cv_trace_dir, "directory for trace files");
  converge->add_flag("--no-subsets", cv_no_subsets, "skip crash-subset participation");

  auto* verify = app.add_subcommand("verify", "check recorded traces");
  std::string vf_trace_dir, vf_task, vf_report;
  verify->add_option("--trace-dir", vf_trace_dir, "directory of run_*.json traces")->required();
  verify->add_option("--task", vf_task, "task JSON (complex + kind + iterations)")->required();
  verify->add_option("--report", vf_report, "write the aggregate report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (subdivide->parsed())
      return cmd_subdivide(sd_complex, sd_kind, sd_iterations, sd_out);
    if (homology->parsed()) return cmd_homology(hm_complex, hm_links);
    if (converge->parsed())
      return cmd_converge(cv_complex, cv_kind, cv_iterations, cv_inputs, cv_schedule, cv_seed,
                          cv_max_runs, cv_trace_dir, cv_no_subsets);
    if (verify->parsed()) return cmd_verify(vf_trace_dir, vf_task, vf_report);
  } catch (const TaskError& e) {
    std::cerr << "task error: " << e.what() << "\n";
    return kExitTask;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ContractError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return kExitUsage;
}
