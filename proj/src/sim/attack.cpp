#include "ksat/sim/attack.hpp"

#include "ksat/core/errors.hpp"

namespace ksat::sim {

namespace {

// The source must be faulty. When every optimal witness puts all of F into C
// the best witness with some faulty process is taken instead, trying sources
// in ascending id order.
trust::InconsistencyResult best_witness_with_source(const trust::TrustModel& model,
                                                    const trust::SearchOptions& search) {
  trust::InconsistencyResult best = trust::analyze_inconsistency(model, search);
  if (!best.witness.faulty.empty()) return best;
  ProcessSet fault_prone;
  for (const auto& m : model.fault_model()) fault_prone = fault_prone | m;
  if (fault_prone.empty()) throw NotVulnerable("the fault model admits no Byzantine source");
  best = {};
  fault_prone.for_each([&](ProcessId r) {
    auto candidate = trust::analyze_inconsistency_with(model, ProcessSet{r}, search);
    if (candidate.lambda > best.lambda || best.witness.faulty.empty()) best = std::move(candidate);
  });
  return best;
}

}  // namespace

AttackPlan synthesize_multispend_attack(const trust::TrustModel& model, const AttackOptions& opts) {
  const trust::InconsistencyResult found = best_witness_with_source(model, opts.search);
  const trust::InconsistencyWitness& w = found.witness;
  if (w.independent.size() < 2) {
    throw NotVulnerable("inconsistency number is " + std::to_string(found.lambda) + "; no multi-spend is possible");
  }
  if (!opts.messages.empty() && opts.messages.size() != w.independent.size()) {
    throw InvalidParameters("expected " + std::to_string(w.independent.size()) + " messages, got " +
                            std::to_string(opts.messages.size()));
  }

  const ProcessId source = w.faulty.front();
  const auto genesis = ledger::Transaction::genesis({{source, opts.amount}});
  AttackPlan plan{Scenario(model, genesis), w, source, w.independent.to_vector(), {}};
  Scenario& sc = plan.scenario;
  sc.name = "synthesized-multispend";
  sc.faulty = w.faulty;
  sc.keys = opts.keys;
  sc.scheduler.kind = SchedulerKind::adversarial;

  const ByzantineSigner signer(sc.keys, sc.faulty);
  for (std::size_t i = 0; i < plan.targets.size(); ++i) {
    const ProcessId target = plan.targets[i];
    ledger::TxBody body;
    body.issuer = source;
    body.outputs = {{target, opts.amount}};
    body.inputs = {genesis.id()};
    if (!opts.messages.empty()) body.message = opts.messages[i];
    const ledger::Transaction spend(std::move(body));
    plan.spends.push_back(spend);

    const trust::Quorum quorum = w.quorum_map.choice[target];
    const ProcessSet honest_part = quorum - w.faulty;
    sc.byzantine[source].sends.push_back(ScriptedSend{honest_part, signer.req(spend)});
    (quorum & w.faulty).for_each([&](ProcessId b) {
      sc.byzantine[b].sends.push_back(ScriptedSend{honest_part, signer.echo(b, spend)});
    });
    sc.scheduler.phases.push_back(quorum | ProcessSet{source});
  }
  return plan;
}

}  // namespace ksat::sim
