#include "csa/json_io.hpp"

#include <fstream>

#include "csa/errors.hpp"
#include "csa/version.hpp"

namespace csa {

namespace {

Json simplex_to_json(const Simplex& s) { return Json(s); }

Simplex simplex_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a simplex as an id array");
  Simplex s;
  for (const auto& v : j) s.push_back(v.get<VertexId>());
  if (!is_strictly_sorted(s)) s = normalize_simplex(std::move(s));
  return s;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json complex_to_json(const Complex& c) {
  Json vertices = Json::array();
  for (const auto& v : c.vertex_table()) {
    Json entry{{"id", v.id}, {"color", v.color}};
    if (!v.label.empty()) entry["label"] = v.label;
    vertices.push_back(std::move(entry));
  }
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(simplex_to_json(f));
  return Json{{"vertices", std::move(vertices)}, {"facets", std::move(facets)}};
}

Complex complex_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
      throw InputError("complex JSON needs 'vertices' and 'facets'");
    std::vector<Vertex> vertices;
    for (const auto& v : j.at("vertices")) {
      Vertex vertex;
      vertex.id = v.at("id").get<VertexId>();
      vertex.color = v.value("color", kNoColor);
      vertex.label = v.value("label", std::string{});
      vertices.push_back(std::move(vertex));
    }
    std::vector<Simplex> facets;
    for (const auto& f : j.at("facets")) facets.push_back(simplex_from_json(f));
    return Complex::build(std::move(vertices), std::move(facets));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed complex JSON: ") + e.what());
  }
}

Json carrier_table_to_json(const Subdivision& sub) {
  Json carriers = Json::array();
  for (const auto& v : sub.result.vertex_table())
    carriers.push_back(Json{{"simplex", Json::array({v.id})},
                            {"carrier", simplex_to_json(sub.vertex_carrier[static_cast<std::size_t>(v.id)])}});
  for (const auto& f : sub.result.facets())
    carriers.push_back(Json{{"simplex", simplex_to_json(f)},
                            {"carrier", simplex_to_json(sub.carrier_of(f))}});
  return Json{{"carriers", std::move(carriers)}};
}

Json task_to_json(const Task& task) {
  return Json{{"complex", complex_to_json(task.input())},
              {"kind", task.kind()},
              {"iterations", task.iterations()}};
}

Task task_from_json(const Json& j) {
  try {
    const std::string kind = j.value("kind", "ch");
    if (kind != "ch") throw TaskError("task subdivision kind must be chromatic ('ch')");
    return Task::make_ch(complex_from_json(j.at("complex")), j.value("iterations", 1));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed task JSON: ") + e.what());
  }
}

namespace {

Json round_state_to_json(ProcessId p, const RoundState& rs) {
  Json entry{{"process", p},
             {"round", rs.round},
             {"P", simplex_to_json(rs.participating)},
             {"core", simplex_to_json(rs.core)},
             {"refined_core", simplex_to_json(rs.refined_core)},
             {"simplex", simplex_to_json(rs.chosen)},
             {"view", simplex_to_json(rs.view)}};
  entry["start_vertex"] = rs.start_vertex ? Json(*rs.start_vertex) : Json(nullptr);
  entry["decision"] = rs.decision ? Json(*rs.decision) : Json(nullptr);
  return entry;
}

RoundState round_state_from_json(const Json& j) {
  RoundState rs;
  rs.round = j.at("round").get<int>();
  rs.participating = simplex_from_json(j.at("P"));
  rs.core = simplex_from_json(j.at("core"));
  rs.refined_core = simplex_from_json(j.at("refined_core"));
  rs.chosen = simplex_from_json(j.at("simplex"));
  rs.view = simplex_from_json(j.at("view"));
  if (!j.at("start_vertex").is_null()) rs.start_vertex = j.at("start_vertex").get<VertexId>();
  if (!j.at("decision").is_null()) rs.decision = j.at("decision").get<VertexId>();
  return rs;
}

Json partition_to_json(const OrderedPartition& partition) {
  Json blocks = Json::array();
  for (const auto& block : partition.blocks) blocks.push_back(Json(block));
  return blocks;
}

OrderedPartition partition_from_json(const Json& j) {
  OrderedPartition partition;
  for (const auto& block : j) {
    std::vector<ProcessId> members;
    for (const auto& p : block) members.push_back(p.get<ProcessId>());
    partition.blocks.push_back(std::move(members));
  }
  return partition;
}

ScheduleMode mode_from_string(const std::string& mode) {
  if (mode == "canonical") return ScheduleMode::Canonical;
  if (mode == "random") return ScheduleMode::Random;
  if (mode == "exhaustive") return ScheduleMode::Exhaustive;
  if (mode == "explicit") return ScheduleMode::Explicit;
  throw InputError("unknown schedule mode: " + mode);
}

}  // namespace

Json trace_to_json(const Trace& trace) {
  Json j;
  j["version"] = kVersion;
  j["kind"] = trace.kind;
  j["iterations"] = trace.iterations;
  j["participants"] = Json(trace.participants);
  j["max_round"] = trace.max_round;

  Json inputs = Json::object();
  for (const auto& [p, v] : trace.inputs) inputs[std::to_string(p)] = v;
  j["inputs"] = std::move(inputs);

  Json decisions = Json::object();
  for (const auto& [p, u] : trace.decisions) decisions[std::to_string(p)] = u;
  j["decisions"] = std::move(decisions);

  Json schedule{{"mode", to_string(trace.mode)}};
  if (trace.mode == ScheduleMode::Random) schedule["seed"] = trace.seed;
  if (trace.mode == ScheduleMode::Exhaustive) schedule["cursor"] = Json(trace.cursor);
  Json choices = Json::array();
  for (const auto& choice : trace.choices)
    choices.push_back(Json{{"round", choice.round},
                           {"site", choice.site},
                           {"partition", partition_to_json(choice.partition)}});
  schedule["choices"] = std::move(choices);
  j["schedule"] = std::move(schedule);

  Json rounds = Json::array();
  for (int r = 1; r <= trace.max_round; ++r)
    for (const auto& [p, states] : trace.rounds)
      for (const auto& rs : states)
        if (rs.round == r) rounds.push_back(round_state_to_json(p, rs));
  j["rounds"] = std::move(rounds);

  Json views = Json::array();
  for (const auto& [round, cells] : trace.views_memory) {
    Json entry{{"round", round}};
    Json cell_list = Json::array();
    for (const auto& [p, view] : cells)
      cell_list.push_back(Json{{"process", p}, {"view", simplex_to_json(view)}});
    entry["cells"] = std::move(cell_list);
    views.push_back(std::move(entry));
  }
  Json simplexes = Json::array();
  for (const auto& [round, cells] : trace.simplex_memory) {
    Json entry{{"round", round}};
    Json cell_list = Json::array();
    for (const auto& [p, pair] : cells)
      cell_list.push_back(Json{{"process", p},
                               {"simplex", simplex_to_json(pair.simplex)},
                               {"refined_core", simplex_to_json(pair.core)}});
    entry["cells"] = std::move(cell_list);
    simplexes.push_back(std::move(entry));
  }
  j["memory"] = Json{{"participating", Json(trace.participants)},
                     {"views", std::move(views)},
                     {"simplexes", std::move(simplexes)}};
  return j;
}

Trace trace_from_json(const Json& j) {
  try {
    Trace trace;
    trace.kind = j.at("kind").get<std::string>();
    trace.iterations = j.at("iterations").get<int>();
    trace.max_round = j.at("max_round").get<int>();
    for (const auto& p : j.at("participants")) trace.participants.push_back(p.get<ProcessId>());
    for (const auto& [key, value] : j.at("inputs").items())
      trace.inputs.emplace(std::stoi(key), value.get<VertexId>());
    for (const auto& [key, value] : j.at("decisions").items())
      trace.decisions.emplace(std::stoi(key), value.get<VertexId>());

    const Json& schedule = j.at("schedule");
    trace.mode = mode_from_string(schedule.at("mode").get<std::string>());
    trace.seed = schedule.value("seed", std::uint64_t{0});
    if (schedule.contains("cursor"))
      for (const auto& c : schedule.at("cursor")) trace.cursor.push_back(c.get<std::size_t>());
    for (const auto& choice : schedule.at("choices"))
      trace.choices.push_back({choice.at("round").get<int>(),
                               choice.at("site").get<std::string>(),
                               partition_from_json(choice.at("partition"))});

    for (const auto& entry : j.at("rounds")) {
      const ProcessId p = entry.at("process").get<ProcessId>();
      trace.rounds[p].push_back(round_state_from_json(entry));
    }
    for (const auto& entry : j.at("memory").at("views")) {
      const int round = entry.at("round").get<int>();
      for (const auto& cell : entry.at("cells"))
        trace.views_memory[round].emplace(cell.at("process").get<ProcessId>(),
                                          simplex_from_json(cell.at("view")));
    }
    for (const auto& entry : j.at("memory").at("simplexes")) {
      const int round = entry.at("round").get<int>();
      for (const auto& cell : entry.at("cells"))
        trace.simplex_memory[round].emplace(
            cell.at("process").get<ProcessId>(),
            SimplexCorePair{simplex_from_json(cell.at("simplex")),
                            simplex_from_json(cell.at("refined_core"))});
    }
    return trace;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed trace JSON: ") + e.what());
  }
}

Json trace_report_to_json(const TraceReport& report) {
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json entry{{"id", v.id}, {"pass", v.pass}};
    if (!v.pass) entry["witness"] = v.witness;
    verdicts.push_back(std::move(entry));
  }
  return Json{{"all_pass", report.all_pass},
              {"rounds_used", report.rounds_used},
              {"verdicts", std::move(verdicts)},
              {"version", kVersion}};
}

Json sweep_report_to_json(const SweepReport& report) {
  Json failures = Json::object();
  for (const auto& [id, count] : report.verdict_failures) failures[id] = count;
  Json decision_map = Json::array();
  for (const auto& entry : report.decision_map) {
    Json decisions = Json::object();
    for (const auto& [p, u] : entry.decisions) decisions[std::to_string(p)] = u;
    decision_map.push_back(Json{{"participants", Json(entry.participants)},
                                {"schedule", entry.schedule_key},
                                {"decisions", std::move(decisions)}});
  }
  return Json{{"runs", report.runs},
              {"failures", report.failures},
              {"max_rounds", report.max_rounds},
              {"verdict_failures", std::move(failures)},
              {"failure_witnesses", Json(report.failure_witnesses)},
              {"decision_map", std::move(decision_map)},
              {"version", kVersion}};
}

Json connectivity_report_to_json(const ConnectivityReport& report) {
  Json links = Json::array();
  for (const auto& entry : report.links)
    links.push_back(Json{{"simplex", Json(entry.simplex)},
                         {"required", entry.required},
                         {"betti", Json(entry.betti)},
                         {"pass", entry.pass},
                         {"proxy_only", entry.proxy_only}});
  return Json{{"betti", Json(report.betti)},
              {"homologically_k_connected", report.homologically_k_connected},
              {"pass", report.pass},
              {"links", std::move(links)},
              {"version", kVersion}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << contents;
  if (!out) throw InputError("failed writing file: " + path);
}

}  // namespace csa
