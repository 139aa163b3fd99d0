#include "ksat/sim/kcb.hpp"

#include "ksat/core/errors.hpp"

namespace ksat::sim {

namespace {

ledger::Transaction broadcast_tx(ProcessId source, const ledger::Transaction& genesis, ledger::Amount amount,
                                 ProcessId payee, const Bytes& value) {
  ledger::TxBody body;
  body.issuer = source;
  body.outputs = {{payee, amount}};
  body.inputs = {genesis.id()};
  body.message = value;
  return ledger::Transaction(std::move(body));
}

}  // namespace

KcbInstance kcb_broadcast(const trust::TrustModel& model, ProcessId source, const Bytes& value, const KeySpec& keys) {
  if (source >= model.size()) throw SchemaError("source " + process_label(source) + " is outside the model");
  const ledger::Amount amount = 1;
  const auto genesis = ledger::Transaction::genesis({{source, amount}});
  KcbInstance k{Scenario(model, genesis), source};
  k.scenario.name = "kcb-correct-source";
  k.scenario.keys = keys;
  k.scenario.honest.push_back(HonestAction{broadcast_tx(source, genesis, amount, source, value)});
  return k;
}

KcbInstance kcb_byzantine_broadcast(const trust::TrustModel& model, const AttackOptions& opts) {
  const auto lambda = trust::inconsistency_number(model, opts.search);
  const bool has_faults = !model.fault_model().front().empty();
  if (lambda >= 2 && has_faults) {
    AttackOptions with_values = opts;
    with_values.messages.clear();
    for (std::size_t i = 0; i < lambda; ++i) with_values.messages.push_back(bytes_of("value-" + std::to_string(i + 1)));
    AttackPlan plan = synthesize_multispend_attack(model, with_values);
    plan.scenario.name = "kcb-byzantine-source";
    return KcbInstance{std::move(plan.scenario), plan.source};
  }
  if (!has_faults) throw NotVulnerable("the fault model admits no Byzantine source");

  const ProcessSet faulty = model.fault_model().front();
  const ProcessId source = faulty.front();
  const auto genesis = ledger::Transaction::genesis({{source, opts.amount}});
  KcbInstance k{Scenario(model, genesis), source};
  Scenario& sc = k.scenario;
  sc.name = "kcb-byzantine-source";
  sc.faulty = faulty;
  sc.keys = opts.keys;

  const std::vector<ProcessId> correct = (model.processes() - faulty).to_vector();
  ProcessSet halves[2];
  for (std::size_t i = 0; i < correct.size(); ++i) halves[i % 2].insert(correct[i]);
  const ByzantineSigner signer(sc.keys, faulty);
  for (int i = 0; i < 2; ++i) {
    const auto tx = broadcast_tx(source, genesis, opts.amount, source, bytes_of(i == 0 ? "value-1" : "value-2"));
    sc.byzantine[source].sends.push_back(ScriptedSend{halves[i], signer.req(tx)});
    faulty.for_each([&](ProcessId b) {
      sc.byzantine[b].sends.push_back(ScriptedSend{model.processes(), signer.echo(b, tx)});
    });
  }
  return k;
}

KcbOutcome kcb_collect(const RunReport& report, ProcessId source) {
  KcbOutcome out;
  out.bound = report.k_bound;
  for (const auto& o : report.correct) {
    std::map<ledger::TxRef, const ledger::Transaction*> by_id;
    for (const auto& tx : o.history) by_id.emplace(tx.id(), &tx);
    for (const auto& ref : o.accepted_order) {
      const auto& tx = *by_id.at(ref);
      if (tx.is_genesis() || tx.issuer() != source) continue;
      if (tx.inputs() != std::set<ledger::TxRef>{report.genesis.id()} || !tx.body().message) continue;
      out.delivered.emplace(o.id, *tx.body().message);
      out.values.insert(*tx.body().message);
      break;
    }
  }
  out.consistent = !out.bound || out.values.size() <= *out.bound;
  return out;
}

}  // namespace ksat::sim
