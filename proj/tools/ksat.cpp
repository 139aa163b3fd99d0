#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ksat/core/errors.hpp"
#include "ksat/io/json.hpp"
#include "ksat/sim/attack.hpp"
#include "ksat/sim/batch.hpp"
#include "ksat/sim/kcb.hpp"
#include "ksat/trust/inconsistency.hpp"
#include "ksat/trust/reference.hpp"

namespace {

using namespace ksat;
using io::Json;

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kSchema = 2,
  kSizeLimit = 3,
  kViolated = 4,
  kNontermination = 5,
};

std::string witness_text(const trust::InconsistencyWitness& w) {
  std::string out = "F = " + w.faulty.label() + ", C = " + w.independent.label() + ", S:";
  w.independent.for_each([&](ProcessId p) { out += " S(" + process_label(p) + ")=" + w.quorum_map.choice[p].label(); });
  return out;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string model_file;
  std::vector<std::size_t> uniform;
  std::string emit;
  std::uint64_t exact_cap = trust::SearchOptions{}.node_budget;
  bool reference = false;
  bool json = false;
};

int analyze(const AnalyzeArgs& a) {
  std::optional<trust::TrustModel> model;
  if (!a.uniform.empty()) {
    model.emplace(trust::TrustModel::uniform(a.uniform[0], a.uniform[1], a.uniform[2]));
  } else {
    model.emplace(io::load_model(a.model_file));
  }
  if (!a.emit.empty()) {
    const std::string text = io::model_to_json(*model).dump(2) + "\n";
    if (a.emit == "-") {
      std::cout << text;
      return kOk;
    }
    std::ofstream(a.emit) << text;
  }

  Json j{{"n", model->size()}};
  Json liveness = Json::array();
  for (const auto& f : model->fault_model()) {
    ProcessSet live;
    (model->processes() - f).for_each([&](ProcessId p) {
      if (trust::is_live(*model, p, f)) live.insert(p);
    });
    liveness.push_back({{"faulty", f.to_vector()}, {"live", live.to_vector()}});
  }

  trust::SearchOptions opts;
  opts.node_budget = a.exact_cap;
  int code = kOk;
  std::optional<trust::InconsistencyResult> result;
  try {
    result = trust::analyze_inconsistency(*model, opts);
    j["lambda"] = result->lambda;
    j["witness"] = io::witness_to_json(result->witness);
    j["nodes_explored"] = result->nodes_explored;
  } catch (const SizeLimitExceeded& e) {
    j["lambda"] = nullptr;
    j["lambda_lower_bound"] = e.partial();
    j["error"] = e.what();
    code = kSizeLimit;
  }
  if (a.reference && result) {
    try {
      j["reference_lambda"] = trust::reference::inconsistency_number_serial(*model);
    } catch (const SizeLimitExceeded& e) {
      j["reference_lambda"] = nullptr;
      j["reference_lower_bound"] = e.partial();
    }
  }
  if (!a.uniform.empty()) j["closed_form"] = trust::uniform_inconsistency(a.uniform[0], a.uniform[1], a.uniform[2]);
  j["liveness"] = liveness;

  if (a.json) {
    std::cout << j.dump(2) << "\n";
    return code;
  }
  std::cout << "processes      " << model->size() << "\n";
  if (result) {
    std::cout << "lambda         " << result->lambda << "\n";
    std::cout << "witness        " << witness_text(result->witness) << "\n";
  } else {
    std::cout << "lambda         >= " << j["lambda_lower_bound"].get<std::size_t>() << " (search budget exhausted)\n";
  }
  if (j.contains("reference_lambda")) {
    std::cout << "reference      " << (j["reference_lambda"].is_null() ? std::string("over budget")
                                                                        : std::to_string(j["reference_lambda"].get<std::size_t>()))
              << "\n";
  }
  if (j.contains("closed_form")) std::cout << "closed form    " << j["closed_form"].get<std::size_t>() << "\n";
  for (const auto& f : model->fault_model()) {
    ProcessSet live;
    (model->processes() - f).for_each([&](ProcessId p) {
      if (trust::is_live(*model, p, f)) live.insert(p);
    });
    std::cout << "F = " << f.label() << "  live " << live.label() << "\n";
  }
  return code;
}

// ---- table ----

int table(std::size_t n, std::size_t q, bool json) {
  if (q == 0 || q > n) throw InvalidParameters("need 0 < q <= n");
  std::vector<std::size_t> values;
  for (std::size_t f = 0; f < q; ++f) values.push_back(trust::uniform_inconsistency(n, q, f));
  Json rows = Json::array();
  if (json) {
    for (std::size_t f = 0; f < values.size(); ++f) rows.push_back({{"f", f}, {"lambda", values[f]}});
    std::cout << Json{{"n", n}, {"q", q}, {"rows", rows}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "n = " << n << ", q = " << q << "\n";
  std::cout << "f\tlambda\n";
  for (std::size_t f = 0; f < values.size(); ++f) std::cout << f << "\t" << values[f] << "\n";
  return kOk;
}

// ---- simulate / attack / kcb ----

int exit_for(const std::vector<sim::RunReport>& reports) {
  bool nonterminating = false;
  for (const auto& r : reports) {
    if (r.any_violation()) return kViolated;
    nonterminating = nonterminating || r.status == sim::RunStatus::nontermination;
  }
  return nonterminating ? kNontermination : kOk;
}

void print_reports(const std::vector<sim::RunReport>& reports, bool json) {
  if (json) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(io::report_to_json(r));
    std::cout << (reports.size() == 1 ? all[0] : all).dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) std::cout << "\n";
    std::cout << io::report_summary(reports[i]);
  }
}

struct SimulateArgs {
  std::vector<std::string> scenarios;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool json = false;
  bool disable_guard = false;
};

int simulate(const SimulateArgs& a) {
  std::optional<std::uint64_t> seed = a.seed;
  if (!seed) {
    if (const char* env = std::getenv("KSAT_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        throw SchemaError(std::string("KSAT_SEED is not an unsigned integer: ") + env);
      }
    }
  }
  std::vector<sim::Scenario> scenarios;
  for (const auto& path : a.scenarios) {
    auto sc = io::load_scenario(path);
    if (seed) sc.scheduler.seed = *seed;
#ifdef KSAT_ENABLE_MUTANTS
    sc.engine.skip_used_input_guard = a.disable_guard;
#endif
    scenarios.push_back(std::move(sc));
  }
  const auto reports = sim::run_batch(scenarios, {}, a.jobs);
  print_reports(reports, a.json);
  return exit_for(reports);
}

int attack(const std::string& model_file, bool json) {
  const auto model = io::load_model(model_file);
  std::optional<sim::AttackPlan> found;
  try {
    found = sim::synthesize_multispend_attack(model);
  } catch (const NotVulnerable& e) {
    if (json) {
      std::cout << Json{{"vulnerable", false}, {"reason", e.what()}}.dump(2) << "\n";
    } else {
      std::cout << "not vulnerable: " << e.what() << "\n";
    }
    return kOk;
  }
  const sim::AttackPlan& plan = *found;
  const auto report = sim::run(plan.scenario);
  if (json) {
    Json targets = Json::array();
    for (std::size_t i = 0; i < plan.targets.size(); ++i) {
      targets.push_back({{"target", plan.targets[i]}, {"tx", plan.spends[i].id().hex()}});
    }
    std::cout << Json{{"vulnerable", true},
                      {"source", plan.source},
                      {"witness", io::witness_to_json(plan.witness)},
                      {"spends", targets},
                      {"report", io::report_to_json(report)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "witness       " << witness_text(plan.witness) << "\n";
    std::cout << "source        " << process_label(plan.source) << " issues " << plan.spends.size()
              << " conflicting spends\n";
    for (std::size_t i = 0; i < plan.targets.size(); ++i) {
      std::cout << "  " << plan.spends[i].id().short_hex() << " -> " << process_label(plan.targets[i]) << "\n";
    }
    std::cout << "\n" << io::report_summary(report);
  }
  return exit_for({report});
}

struct KcbArgs {
  std::string model_file;
  bool byzantine = false;
  ProcessId source = 0;
  std::string value = "m";
  bool json = false;
};

int kcb(const KcbArgs& a) {
  const auto model = io::load_model(a.model_file);
  const sim::KcbInstance inst =
      a.byzantine ? sim::kcb_byzantine_broadcast(model) : sim::kcb_broadcast(model, a.source, bytes_of(a.value));
  const auto report = sim::run(inst.scenario);
  const auto outcome = sim::kcb_collect(report, inst.source);
  auto text = [](const Bytes& b) { return std::string(b.begin(), b.end()); };

  if (a.json) {
    Json delivered = Json::object();
    for (const auto& [p, v] : outcome.delivered) delivered[std::to_string(p)] = text(v);
    Json values = Json::array();
    for (const auto& v : outcome.values) values.push_back(text(v));
    std::cout << Json{{"source", inst.source},
                      {"byzantine_source", a.byzantine},
                      {"delivered", delivered},
                      {"values", values},
                      {"bound", outcome.bound ? Json(*outcome.bound) : Json(nullptr)},
                      {"consistent", outcome.consistent},
                      {"report", io::report_to_json(report)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "source        " << process_label(inst.source) << (a.byzantine ? " (Byzantine)" : "") << "\n";
    for (const auto& o : report.correct) {
      const auto it = outcome.delivered.find(o.id);
      std::cout << "  " << process_label(o.id) << (o.live ? " live   " : " unlive ")
                << (it == outcome.delivered.end() ? std::string("-") : "delivers \"" + text(it->second) + "\"") << "\n";
    }
    std::cout << "|M|           " << outcome.values.size();
    if (outcome.bound) std::cout << " (bound " << *outcome.bound << ")";
    std::cout << "\n\n" << io::report_summary(report);
  }
  if (!outcome.consistent) return kViolated;
  return exit_for({report});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-spending asset transfer: trust analysis, simulation and attacks"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Inconsistency number, witness and liveness of a trust model");
  auto* model_opt =
      analyze_cmd->add_option("--model", analyze_args.model_file, "Trust-model JSON file")->check(CLI::ExistingFile);
  auto* uniform_opt = analyze_cmd->add_option("--uniform", analyze_args.uniform, "Generate the uniform model with n, q, f")
                          ->expected(3);
  model_opt->excludes(uniform_opt);
  analyze_cmd->add_option("--emit", analyze_args.emit, "Write the model as JSON to this file ('-' prints it and stops)");
  analyze_cmd->add_option("--exact-cap", analyze_args.exact_cap, "Search-node budget per maximal faulty set");
  analyze_cmd->add_flag("--reference", analyze_args.reference, "Also run the serial enumeration of every graph");
  analyze_cmd->add_flag("--json", analyze_args.json, "JSON output");

  std::size_t table_n = 100;
  std::size_t table_q = 67;
  bool table_json = false;
  auto* table_cmd = app.add_subcommand("table", "Closed-form inconsistency numbers of uniform models for every f < q");
  table_cmd->add_option("--n", table_n, "Number of processes")->capture_default_str();
  table_cmd->add_option("--q", table_q, "Quorum size")->capture_default_str();
  table_cmd->add_flag("--json", table_json, "JSON output");

  SimulateArgs simulate_args;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run scenario files and check the asset-transfer properties");
  simulate_cmd->add_option("--scenario", simulate_args.scenarios, "Scenario JSON file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("--seed", simulate_args.seed, "Scheduler seed (falls back to KSAT_SEED)");
  simulate_cmd->add_option("--jobs", simulate_args.jobs, "Scenarios run in parallel")->check(CLI::PositiveNumber);
  simulate_cmd->add_flag("--json", simulate_args.json, "JSON report");
#ifdef KSAT_ENABLE_MUTANTS
  simulate_cmd->add_flag("--disable-usedinp-guard", simulate_args.disable_guard,
                         "Test-only mutant: echo requests whose inputs were already echoed");
#endif

  std::string attack_model;
  bool attack_json = false;
  auto* attack_cmd = app.add_subcommand("attack", "Synthesize and run the multi-spend attack for a trust model");
  attack_cmd->add_option("--model", attack_model, "Trust-model JSON file")->required()->check(CLI::ExistingFile);
  attack_cmd->add_flag("--json", attack_json, "JSON output");

  KcbArgs kcb_args;
  auto* kcb_cmd = app.add_subcommand("kcb", "k-consistent broadcast over asset transfer");
  kcb_cmd->add_option("--model", kcb_args.model_file, "Trust-model JSON file")->required()->check(CLI::ExistingFile);
  kcb_cmd->add_flag("--byzantine-source", kcb_args.byzantine, "Let a faulty source equivocate");
  kcb_cmd->add_option("--source", kcb_args.source, "Correct source process id (0-based)");
  kcb_cmd->add_option("--value", kcb_args.value, "Value a correct source broadcasts");
  kcb_cmd->add_flag("--json", kcb_args.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchema;
  }
  if (analyze_cmd->parsed() && analyze_args.model_file.empty() && analyze_args.uniform.empty()) {
    std::cerr << "analyze: one of --model or --uniform is required\n";
    return kSchema;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(analyze_args);
    if (table_cmd->parsed()) return table(table_n, table_q, table_json);
    if (simulate_cmd->parsed()) return simulate(simulate_args);
    if (attack_cmd->parsed()) return attack(attack_model, attack_json);
    if (kcb_cmd->parsed()) return kcb(kcb_args);
  } catch (const NotVulnerable& e) {
    std::cout << "not vulnerable: " << e.what() << "\n";
    return kOk;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (best found so far: " << e.partial() << ")\n";
    return kSizeLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
