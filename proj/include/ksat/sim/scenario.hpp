#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksat/crypto/sigscheme.hpp"
#include "ksat/ledger/transaction.hpp"
#include "ksat/protocol/message.hpp"
#include "ksat/protocol/replica.hpp"
#include "ksat/trust/trust_model.hpp"

namespace ksat::sim {

struct KeySpec {
  crypto::Scheme scheme = crypto::Scheme::ed25519;
  std::uint64_t seed = 1;
  bool operator==(const KeySpec&) const = default;
};

/// A transfer() call by a correct process. It fires as soon as every input is
/// in the issuer's local history; actions fire in list order.
struct HonestAction {
  ledger::Transaction tx;
};

/// A message a Byzantine process puts on the wire at the start of the run.
/// `message.sender` is the Byzantine process; signatures inside may be real
/// signatures by Byzantine keys or arbitrary bytes, never another process's.
struct ScriptedSend {
  ProcessSet to;
  protocol::Message message;
};

struct AttackScript {
  std::vector<ScriptedSend> sends;
};

enum class SchedulerKind { fifo, random, adversarial };

/// fifo delivers in send order. random picks uniformly among in-flight
/// messages with a seeded generator. adversarial walks `phases`: while in
/// phase P it delivers (in send order) only messages whose sender and
/// recipient are both in P, moving on when none is left; after the last
/// phase it behaves like fifo.
struct SchedulerSpec {
  SchedulerKind kind = SchedulerKind::fifo;
  std::uint64_t seed = 0;
  std::vector<ProcessSet> phases;
};

struct Scenario {
  std::string name;
  trust::TrustModel model;
  ProcessSet faulty;
  ledger::Transaction genesis;
  KeySpec keys;
  std::vector<HonestAction> honest;
  std::map<ProcessId, AttackScript> byzantine;
  SchedulerSpec scheduler;
  std::uint64_t max_events = 1'000'000;
  protocol::EngineOptions engine;
  /// Bound used by the k-Spending verdict; the inconsistency number of the
  /// model when unset.
  std::optional<std::size_t> k_bound;

  Scenario(trust::TrustModel m, ledger::Transaction g) : model(std::move(m)), genesis(std::move(g)) {}
};

/// Throws SchemaError describing the first problem: faulty set outside the
/// fault model, honest actions by faulty processes or with conflicting
/// inputs, scripts for correct processes or with a sender other than their
/// owner, ids outside the model.
void validate(const Scenario& s);

/// Signs on behalf of the faulty processes of a scenario. Refuses to sign for
/// correct processes.
class ByzantineSigner {
public:
  ByzantineSigner(const KeySpec& keys, ProcessSet faulty) : keys_(keys), faulty_(faulty) {}

  crypto::Signature sign(ProcessId signer, const ledger::Transaction& tx) const;
  ledger::SignedTx signed_tx(const ledger::Transaction& tx) const { return {tx, sign(tx.issuer(), tx)}; }

  protocol::Message req(const ledger::Transaction& tx) const;
  protocol::Message echo(ProcessId echoer, const ledger::Transaction& tx) const;
  protocol::Message acc(ProcessId sender, const ledger::Accusation& a) const;

private:
  KeySpec keys_;
  ProcessSet faulty_;
};

}  // namespace ksat::sim
