#include "ksat/sim/scenario.hpp"

#include "ksat/core/errors.hpp"

namespace ksat::sim {

void validate(const Scenario& s) {
  const ProcessSet universe = s.model.processes();
  if (!s.faulty.subset_of(universe)) throw SchemaError("faulty set names an unknown process");
  if (!s.model.admits(s.faulty)) throw SchemaError("faulty set " + s.faulty.label() + " is not admitted by the fault model");
  if (!s.genesis.is_genesis()) throw SchemaError("genesis transaction must not have an issuer");
  for (const auto& [p, _] : s.genesis.outputs()) {
    if (!universe.contains(p)) throw SchemaError("genesis pays an unknown process");
  }

  for (std::size_t i = 0; i < s.honest.size(); ++i) {
    const auto& tx = s.honest[i].tx;
    if (tx.is_genesis()) throw SchemaError("honest action " + std::to_string(i) + " has no issuer");
    if (!universe.contains(tx.issuer())) throw SchemaError("honest action " + std::to_string(i) + " names an unknown issuer");
    if (s.faulty.contains(tx.issuer())) {
      throw SchemaError("honest action " + std::to_string(i) + " is issued by faulty " + process_label(tx.issuer()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ledger::conflicts(tx, s.honest[j].tx)) {
        throw SchemaError("honest actions " + std::to_string(j) + " and " + std::to_string(i) + " double-spend");
      }
    }
  }

  for (const auto& [owner, script] : s.byzantine) {
    if (!s.faulty.contains(owner)) throw SchemaError("script given for correct process " + process_label(owner));
    for (const auto& send : script.sends) {
      if (send.message.sender != owner) throw SchemaError("script of " + process_label(owner) + " sends as another process");
      if (!send.to.subset_of(universe)) throw SchemaError("script sends to an unknown process");
    }
  }
}

crypto::Signature ByzantineSigner::sign(ProcessId signer, const ledger::Transaction& tx) const {
  if (!faulty_.contains(signer)) {
    throw SchemaError("cannot sign for correct process " + process_label(signer));
  }
  return crypto::sign(crypto::KeyPair::derive(keys_.scheme, keys_.seed, signer), tx.encoding());
}

protocol::Message ByzantineSigner::req(const ledger::Transaction& tx) const {
  return protocol::Message{tx.issuer(), ProcessSet{}, protocol::Req{signed_tx(tx)}};
}

protocol::Message ByzantineSigner::echo(ProcessId echoer, const ledger::Transaction& tx) const {
  return protocol::Message{echoer, ProcessSet{}, protocol::Echo{signed_tx(tx), sign(echoer, tx)}};
}

protocol::Message ByzantineSigner::acc(ProcessId sender, const ledger::Accusation& a) const {
  if (!faulty_.contains(sender)) throw SchemaError("scripted sender must be faulty");
  return protocol::Message{sender, ProcessSet{}, protocol::Acc{a}};
}

}  // namespace ksat::sim
