#pragma once

#include <map>
#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "ksat/ledger/accusation.hpp"
#include "ksat/ledger/history.hpp"
#include "ksat/protocol/message.hpp"
#include "ksat/trust/trust_model.hpp"

namespace ksat::protocol {

struct EngineOptions {
#ifdef KSAT_ENABLE_MUTANTS
  /// Mutant: echo every request even if one of its inputs was already echoed
  /// for the same issuer. Exists only to show that the k-Spending check fails.
  bool skip_used_input_guard = false;
#endif
  bool operator==(const EngineOptions&) const = default;
};

/// Local state of one process running the k-spending asset transfer protocol.
/// Plain value: copying it snapshots the replica.
struct ProcessState {
  ProcessId self = 0;
  std::size_t n = 0;
  std::vector<trust::Quorum> quorums;
  crypto::KeyPair keys;
  std::shared_ptr<const ledger::KeyDirectory> directory;
  EngineOptions options;

  std::map<ProcessId, std::set<ledger::TxRef>> echoes;
  std::map<ProcessId, std::set<ledger::TxRef>> used_inputs;
  std::map<ledger::TxRef, ledger::Transaction> pending;
  ledger::History history;
  std::map<ProcessId, std::set<ledger::SignedTx>> signed_requests;
  std::set<ledger::Accusation> accusations;

  /// Acceptance and accusation order, for observers. Append-only.
  std::vector<ledger::TxRef> accepted_log;
  std::vector<ledger::Accusation> accusation_log;

  ProcessState(ProcessId self, std::size_t n, std::vector<trust::Quorum> quorums, crypto::KeyPair keys,
               std::shared_ptr<const ledger::KeyDirectory> directory, ledger::Transaction genesis,
               EngineOptions options = {});

  bool operator==(const ProcessState& o) const;
};

/// Issue tx: sign it and send REQ to every process (self included). Throws
/// InvalidTransaction unless self is the issuer and tx is valid against the
/// local history with all inputs accepted.
std::vector<Message> transfer(ProcessState& s, const ledger::Transaction& tx);

/// Signature-checked REQ handling: store the signed request, echo it unless an
/// input was already echoed for that issuer, then run the local rules.
std::vector<Message> handle_req(ProcessState& s, const Message& m);

/// Signature-checked ECHO handling: record the echo, store the embedded
/// request, echo it under the same guard as REQ, then run the local rules.
std::vector<Message> handle_echo(ProcessState& s, const Message& m);

/// Store and gossip a verifiable accusation not seen before.
std::vector<Message> handle_acc(ProcessState& s, const Message& m);

/// Dispatch on the message kind.
std::vector<Message> handle(ProcessState& s, const Message& m);

/// Some quorum of s has echoed tx (s's own echo counts once it has sent it).
bool quorum_check(const ProcessState& s, const ledger::TxRef& tx);

/// ready(tx): inputs accepted, tx valid, no accepted tx of the same issuer
/// shares an input.
bool ready(const ProcessState& s, const ledger::Transaction& tx);

/// Move ready transactions from pending to the history until nothing changes,
/// visiting pending in ascending id order.
void promote_pending(ProcessState& s);

/// Accuse every issuer with two stored signed requests that share an input;
/// each new accusation is recorded and sent to all processes.
std::vector<Message> detect_conflicts(ProcessState& s);

/// Inputs to the state machine.
struct TransferCall {
  ledger::Transaction tx;
};
struct Delivery {
  Message message;
};
using Event = std::variant<TransferCall, Delivery>;

struct Transition {
  ProcessState state;
  std::vector<Message> outbox;
};

/// Pure form of the handlers above.
Transition apply(ProcessState s, const Event& e);

}  // namespace ksat::protocol
