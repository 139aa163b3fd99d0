// One PASS/FAIL line per acceptance criterion; exits 1 if any line fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "ksat/core/errors.hpp"
#include "ksat/io/json.hpp"
#include "ksat/ledger/views.hpp"
#include "ksat/protocol/replica.hpp"
#include "ksat/sim/attack.hpp"
#include "ksat/sim/batch.hpp"
#include "ksat/sim/fuzz.hpp"
#include "ksat/sim/kcb.hpp"
#include "ksat/trust/reference.hpp"
#include "oracles.hpp"

namespace {

using namespace ksat;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

bool passing(const sim::Verdict& v) {
  return v.status == sim::VerdictStatus::holds || v.status == sim::VerdictStatus::vacuous;
}

struct Config {
  std::string ksat;
  std::size_t fuzz_runs = 1000;
  std::size_t attack_models = 50;
  std::uint64_t seed = 20240601;
};

// Runs shared by criteria 4, 6, 9 and 11.
struct Corpus {
  std::vector<sim::Scenario> fuzz;
  std::vector<sim::RunReport> fuzz_reports;
  std::vector<sim::Scenario> attacks;
  std::vector<sim::RunReport> attack_reports;
  /// Per attack scenario: lambda of the model and the size of the attack
  /// witness, which needs a faulty source.
  std::vector<std::size_t> attack_lambdas;
  std::vector<std::size_t> attack_witness;
  /// Sampled models with lambda >= 2 and no admissible faulty process.
  std::size_t no_source_models = 0;
  std::size_t skipped_models = 0;
};

const trust::SearchOptions kBudget{5'000'000, false};

std::optional<std::size_t> lambda_within_budget(const trust::TrustModel& m) {
  try {
    return trust::inconsistency_number(m, kBudget);
  } catch (const SizeLimitExceeded&) {
    return std::nullopt;
  }
}

void build_corpus(const Config& cfg, Corpus& c) {
  sim::Rng rng(cfg.seed);
  while (c.fuzz.size() < cfg.fuzz_runs) {
    const auto model = sim::random_model(rng);
    const auto lambda = lambda_within_budget(model);
    if (!lambda) {
      ++c.skipped_models;
      continue;
    }
    auto sc = sim::random_scenario(model, rng);
    sc.k_bound = lambda;
    c.fuzz.push_back(std::move(sc));
  }
  sim::RunOptions opts;
  opts.search = kBudget;
  c.fuzz_reports = sim::run_batch(c.fuzz, opts);

  sim::Rng attack_rng(cfg.seed ^ 0xa77ac4);
  std::size_t tries = 0;
  while (c.attacks.size() + c.no_source_models < cfg.attack_models && tries < 200'000) {
    ++tries;
    const auto model = sim::random_model(attack_rng, {4, 7, 3, 2});
    const auto lambda = lambda_within_budget(model);
    if (!lambda || *lambda < 2) continue;
    try {
      sim::AttackOptions opts;
      opts.search = kBudget;
      auto plan = sim::synthesize_multispend_attack(model, opts);
      plan.scenario.k_bound = lambda;
      c.attack_witness.push_back(plan.witness.independent.size());
      c.attacks.push_back(std::move(plan.scenario));
      c.attack_lambdas.push_back(*lambda);
    } catch (const NotVulnerable&) {
      ++c.no_source_models;
    }
  }
  c.attack_reports = sim::run_batch(c.attacks, opts);
}

Outcome criterion_1(const Config& cfg) {
  const auto start = Clock::now();
  const std::string cmd = "\"" + cfg.ksat + "\" table --n 100 --q 67 --json";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {false, "cannot start " + cfg.ksat};
  std::string text;
  char buf[4096];
  while (const auto got = std::fread(buf, 1, sizeof buf, pipe.get())) text.append(buf, got);
  const int status = pclose(pipe.release());
  const double elapsed = seconds_since(start);
  if (status != 0) return {false, "table exited with status " + std::to_string(status)};

  std::vector<std::size_t> expected;
  const std::pair<std::size_t, std::size_t> runs[] = {{34, 1}, {17, 2}, {5, 3}, {3, 4}, {2, 5}, {1, 6},
                                                      {1, 7},  {1, 9},  {1, 12}, {1, 17}, {1, 34}};
  for (auto [count, value] : runs) expected.insert(expected.end(), count, value);

  const auto j = io::Json::parse(text);
  std::vector<std::size_t> got;
  for (const auto& row : j.at("rows")) got.push_back(row.at("lambda").get<std::size_t>());
  if (got != expected) return {false, "row differs from the expected table"};
  return {elapsed < 1.0, "67 rows exact in " + fmt_seconds(elapsed)};
}

Outcome criterion_2() {
  const auto start = Clock::now();
  std::size_t models = 0;
  std::size_t referenced = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t q = 1; q <= n; ++q) {
      for (std::size_t f = 0; f < q; ++f) {
        const auto model = trust::TrustModel::uniform(n, q, f);
        const auto closed = trust::uniform_inconsistency(n, q, f);
        const auto exact = trust::inconsistency_number(model);
        ++models;
        if (exact != closed) {
          return {false, "n=" + std::to_string(n) + " q=" + std::to_string(q) + " f=" + std::to_string(f) +
                             ": search " + std::to_string(exact) + " vs " + std::to_string(closed)};
        }
        if (trust::reference::enumeration_size(model) <= 200'000) {
          ++referenced;
          if (trust::reference::inconsistency_number_serial(model) != closed) {
            return {false, "reference enumeration disagrees at n=" + std::to_string(n)};
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {elapsed < 60.0, std::to_string(models) + " models (" + std::to_string(referenced) +
                              " also by full enumeration) in " + fmt_seconds(elapsed)};
}

Outcome criterion_3() {
  const auto start = Clock::now();
  const auto model = io::load_model(fixture::data("models/split_trust.json"));
  const trust::QuorumMap s1{{ProcessSet{0, 1, 2}, ProcessSet{0, 1}, ProcessSet{0, 1, 2, 3}, ProcessSet{1, 3}}};
  const trust::QuorumMap s2{{ProcessSet{0, 1, 2}, ProcessSet{1, 3}, ProcessSet{0, 1, 2, 3}, ProcessSet{2, 3}}};
  const auto a1 = trust::independence_number(trust::build_trust_graph(model, {2}, s1));
  const auto a2 = trust::independence_number(trust::build_trust_graph(model, {2}, s2));
  const auto r = trust::analyze_inconsistency(model);
  const double elapsed = seconds_since(start);
  const bool ok = a1 == 1 && a2 == 2 && r.lambda == 2 && r.witness.independent == ProcessSet{0, 3} &&
                  r.witness.faulty == ProcessSet{2} && elapsed < 1.0;
  return {ok, "alpha(S1) = " + std::to_string(a1) + ", alpha(S2) = " + std::to_string(a2) +
                  ", lambda = " + std::to_string(r.lambda) + ", C = " + r.witness.independent.label()};
}

Outcome criterion_4(const Corpus& c) {
  std::size_t prefixes = 0;
  for (std::size_t i = 0; i < c.fuzz_reports.size(); ++i) {
    const auto& r = c.fuzz_reports[i];
    for (auto g : oracle::prefix_gammas(r)) {
      ++prefixes;
      if (g > *c.fuzz[i].k_bound) return {false, "run " + std::to_string(i) + " reached gamma " + std::to_string(g)};
    }
    if (r.gamma != oracle::gamma_double_loop(r.correct_histories())) {
      return {false, "run " + std::to_string(i) + ": final gamma disagrees with the oracle"};
    }
  }
  return {c.fuzz_reports.size() >= 1000,
          std::to_string(c.fuzz_reports.size()) + " runs, " + std::to_string(prefixes) + " accept prefixes, " +
              std::to_string(c.skipped_models) + " models over budget skipped"};
}

// gamma = lambda is only reachable when some lambda witness leaves a process
// faulty to act as the equivocating source. Models whose lambda needs every
// fault-prone process correct are counted as misses, separately from runs
// that fall short of the attack witness itself.
Outcome criterion_5(const Corpus& c) {
  std::size_t exact = 0;
  std::size_t short_witness = 0;
  for (std::size_t i = 0; i < c.attack_reports.size(); ++i) {
    const auto gamma = c.attack_reports[i].gamma;
    if (gamma != c.attack_witness[i]) {
      return {false, "model " + std::to_string(i) + ": gamma " + std::to_string(gamma) + " below its attack witness " +
                         std::to_string(c.attack_witness[i])};
    }
    if (gamma == c.attack_lambdas[i]) {
      ++exact;
    } else {
      ++short_witness;
    }
  }
  const std::size_t total = c.attack_reports.size() + c.no_source_models;
  std::string detail = std::to_string(exact) + " of " + std::to_string(total) + " models with gamma = lambda";
  if (short_witness + c.no_source_models > 0) {
    detail += "; " + std::to_string(short_witness) +
              " reach lambda only with F empty (the attack reaches its best faulty-source witness), " +
              std::to_string(c.no_source_models) + " admit no faulty process";
  }
  return {total >= 50 && exact == total, detail};
}

Outcome criterion_6(const Corpus& c) {
  std::size_t quiescent = 0;
  std::size_t holds = 0;
  std::size_t vacuous = 0;
  for (const auto* reports : {&c.fuzz_reports, &c.attack_reports}) {
    for (const auto& r : *reports) {
      if (r.status != sim::RunStatus::quiescent) continue;
      ++quiescent;
      for (auto p : sim::kAllProperties) {
        const auto& v = r.verdicts.at(p);
        if (!passing(v)) {
          return {false, r.scenario + ": " + std::string(sim::property_name(p)) + " " +
                             std::string(sim::verdict_name(v.status)) + " (" + v.detail + ")"};
        }
        (v.status == sim::VerdictStatus::holds ? holds : vacuous) += 1;
      }
    }
  }
  return {quiescent > 0, std::to_string(quiescent) + " quiescent runs, " + std::to_string(holds) + " holds, " +
                             std::to_string(vacuous) + " vacuous"};
}

Outcome criterion_7(std::uint64_t seed) {
  oracle::Rng rng(seed);
  std::size_t checks = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto h = oracle::random_well_formed_history(rng, 6, 16);
    if (!ledger::is_well_formed(h)) return {false, "generator produced a malformed history"};
    for (ProcessId w = 0; w < 6; ++w, ++checks) {
      if (ledger::balance(h, w) < 0) return {false, "negative balance in history " + std::to_string(i)};
    }
  }
  return {true, "10000 histories, " + std::to_string(checks) + " balances"};
}

Outcome criterion_8() {
  const auto split = fixture::split_trust();
  const auto byz = sim::kcb_byzantine_broadcast(split);
  const auto m_byz = sim::kcb_collect(sim::run(byz.scenario), byz.source);

  const auto honest = sim::kcb_broadcast(split, 0, bytes_of("m"));
  const auto honest_report = sim::run(honest.scenario);
  const auto m_honest = sim::kcb_collect(honest_report, honest.source);
  bool all_live = true;
  honest_report.live.for_each([&](ProcessId p) { all_live = all_live && m_honest.delivered.contains(p); });

  std::size_t worst = 0;
  for (const auto& model : {fixture::all_trust_one_fault(), trust::TrustModel::uniform(4, 3, 1),
                            trust::TrustModel::uniform(7, 5, 2), trust::TrustModel::uniform(6, 5, 1)}) {
    if (trust::inconsistency_number(model) != 1) return {false, "fixture is not a lambda = 1 model"};
    const auto inst = sim::kcb_byzantine_broadcast(model);
    worst = std::max(worst, sim::kcb_collect(sim::run(inst.scenario), inst.source).values.size());
  }
  const bool ok = m_byz.values.size() == 2 && m_honest.values.size() == 1 && all_live && worst <= 1;
  return {ok, "|M| = " + std::to_string(m_byz.values.size()) + " with a faulty source, " +
                  std::to_string(m_honest.delivered.size()) + " deliveries of one value with a correct source, " +
                  "|M| <= " + std::to_string(worst) + " on lambda = 1 models"};
}

Outcome criterion_9(const Corpus& c) {
  std::size_t brute = 0;
  for (std::size_t i = 0; i < c.fuzz_reports.size(); ++i) {
    const auto& r = c.fuzz_reports[i];
    const auto g = r.correct_histories();
    if (!r.cover_number) return {false, "run " + std::to_string(i) + " has no cover"};
    if (*r.cover_number < r.gamma) return {false, "run " + std::to_string(i) + ": cover below gamma"};
    for (const auto& cluster : r.clusters) {
      ledger::History merged(r.genesis);
      for (auto p : cluster) merged.merge(r.history_of(*r.outcome(p)));
      if (!ledger::is_well_formed(merged)) return {false, "run " + std::to_string(i) + ": malformed cluster union"};
    }
    if (g.size() <= 5) {
      ++brute;
      if (oracle::cover_brute_force(g) != *r.cover_number) {
        return {false, "run " + std::to_string(i) + ": cover differs from brute force"};
      }
    }
  }
  return {true, std::to_string(c.fuzz_reports.size()) + " runs, " + std::to_string(brute) +
                    " checked against the brute-force cover"};
}

Outcome criterion_10(const Corpus& c, std::uint64_t seed) {
  oracle::Rng rng(seed);
  for (int i = 0; i < 2000; ++i) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 12, (rng() % 100) / 100.0);
    if (trust::independence_number(g) != oracle::mis_all_subsets(g)) return {false, "independence number mismatch"};
  }
  for (const auto* reports : {&c.fuzz_reports, &c.attack_reports}) {
    for (const auto& r : *reports) {
      if (ledger::spending_number(r.correct_histories()) != oracle::gamma_double_loop(r.correct_histories())) {
        return {false, r.scenario + ": spending number mismatch"};
      }
    }
  }

  std::vector<crypto::KeyPair> keys;
  auto dir = std::make_shared<ledger::KeyDirectory>();
  for (ProcessId p = 0; p < 4; ++p) {
    keys.push_back(crypto::KeyPair::derive(crypto::Scheme::hmac_sha512, seed, p));
    dir->push_back(keys.back().public_key());
  }
  const auto genesis = ledger::Transaction::genesis({{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  std::size_t pairs = 0;
  for (int i = 0; i < 500; ++i) {
    protocol::ProcessState s(0, 4, {ProcessSet::all(4)}, keys[0], dir, genesis);
    std::vector<ledger::Transaction> txs;
    std::vector<ledger::TxRef> extra{genesis.id()};
    for (std::size_t k = 0, count = rng() % 8; k < count; ++k) {
      ledger::TxBody b;
      b.issuer = static_cast<ProcessId>(rng() % 4);
      b.outputs = {{static_cast<ProcessId>(rng() % 4), 1 + rng() % 4}};
      b.inputs = {extra[rng() % extra.size()]};
      if (rng() % 3 == 0) b.inputs.insert(extra[rng() % extra.size()]);
      const ledger::Transaction t(b);
      txs.push_back(t);
      extra.push_back(t.id());
      s.signed_requests[t.issuer()].insert({t, crypto::sign(keys[t.issuer()], t.encoding())});
    }
    protocol::detect_conflicts(s);
    std::set<std::pair<ledger::TxRef, ledger::TxRef>> found;
    for (const auto& a : s.accusation_log) {
      if (a.proof().size() != 2) return {false, "accusation with a proof of size " + std::to_string(a.proof().size())};
      auto x = a.proof()[0].tx.id();
      auto y = a.proof()[1].tx.id();
      found.emplace(std::min(x, y), std::max(x, y));
    }
    const auto expected = oracle::conflict_pairs(txs);
    pairs += expected.size();
    if (found != expected) return {false, "detect_conflicts pair set differs from the oracle"};
  }
  return {true, "2000 graphs, all runs' gamma, 500 request sets (" + std::to_string(pairs) + " conflict pairs)"};
}

Outcome criterion_11(const Corpus& c) {
  std::vector<sim::Scenario> all = c.fuzz;
  all.insert(all.end(), c.attacks.begin(), c.attacks.end());
  for (const char* file : {"scenarios/honest_transfer.json", "scenarios/split_trust_attack.json",
                           "scenarios/double_spend_lambda1.json"}) {
    all.push_back(io::load_scenario(fixture::data(file)));
  }
  sim::RunOptions opts;
  opts.search = kBudget;
  std::vector<std::string> first;
  for (int rep = 0; rep < 3; ++rep) {
    const auto reports = sim::run_batch(all, opts);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (rep == 0) {
        first.push_back(reports[i].trace_hash);
      } else if (reports[i].trace_hash != first[i]) {
        return {false, all[i].name + ": trace hash changed on replay " + std::to_string(rep + 1)};
      }
    }
  }
  return {true, std::to_string(all.size()) + " scenarios x 3 runs, identical trace hashes"};
}

Outcome criterion_12(std::uint64_t seed) {
#ifdef KSAT_ENABLE_MUTANTS
  std::vector<sim::Scenario> scenarios{io::load_scenario(fixture::data("scenarios/double_spend_lambda1.json"))};
  for (const auto& model : {fixture::all_trust_one_fault(), trust::TrustModel::uniform(4, 3, 1)}) {
    auto inst = sim::kcb_byzantine_broadcast(model, {.search = {}, .keys = {crypto::Scheme::ed25519, seed}});
    scenarios.push_back(inst.scenario);
  }
  std::size_t caught = 0;
  for (auto sc : scenarios) {
    if (trust::inconsistency_number(sc.model) != 1) return {false, "mutant fixture is not a lambda = 1 model"};
    const auto clean = sim::run(sc);
    if (clean.verdicts.at(sim::Property::k_spending).status != sim::VerdictStatus::holds) {
      return {false, sc.name + ": k-Spending fails without the mutant"};
    }
    sc.engine.skip_used_input_guard = true;
    const auto mutated = sim::run(sc);
    if (mutated.verdicts.at(sim::Property::k_spending).status == sim::VerdictStatus::violated) ++caught;
  }
  return {caught >= 1, std::to_string(caught) + " of " + std::to_string(scenarios.size()) +
                           " lambda = 1 scenarios violate k-Spending under the mutant"};
#else
  (void)seed;
  return {false, "mutants are not compiled into this build (KSAT_ENABLE_MUTANTS=OFF)"};
#endif
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Acceptance suite"};
  app.add_option("--ksat", cfg.ksat, "Path to the ksat binary")->required();
  app.add_option("--fuzz-runs", cfg.fuzz_runs, "Randomized scenarios")->capture_default_str();
  app.add_option("--attack-models", cfg.attack_models, "Random vulnerable models to attack")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const auto start = Clock::now();
  Corpus corpus;
  build_corpus(cfg, corpus);
  std::cout << "corpus: " << corpus.fuzz_reports.size() << " fuzz runs, " << corpus.attack_reports.size()
            << " attack runs in " << fmt_seconds(seconds_since(start)) << "\n";

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, [&] { return criterion_1(cfg); }},
      {2, [] { return criterion_2(); }},
      {3, [] { return criterion_3(); }},
      {4, [&] { return criterion_4(corpus); }},
      {5, [&] { return criterion_5(corpus); }},
      {6, [&] { return criterion_6(corpus); }},
      {7, [&] { return criterion_7(cfg.seed + 7); }},
      {8, [] { return criterion_8(); }},
      {9, [&] { return criterion_9(corpus); }},
      {10, [&] { return criterion_10(corpus, cfg.seed + 10); }},
      {11, [&] { return criterion_11(corpus); }},
      {12, [&] { return criterion_12(cfg.seed + 12); }},
  };
  bool all = true;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
