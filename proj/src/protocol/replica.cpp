#include "ksat/protocol/replica.hpp"

#include <algorithm>

#include "ksat/core/errors.hpp"

namespace ksat::protocol {

using ledger::Accusation;
using ledger::SignedTx;
using ledger::Transaction;
using ledger::TxRef;

ProcessState::ProcessState(ProcessId self_id, std::size_t count, std::vector<trust::Quorum> qs, crypto::KeyPair kp,
                           std::shared_ptr<const ledger::KeyDirectory> dir, Transaction genesis,
                           EngineOptions opts)
    : self(self_id),
      n(count),
      quorums(std::move(qs)),
      keys(std::move(kp)),
      directory(std::move(dir)),
      options(opts),
      history(std::move(genesis)) {}

bool ProcessState::operator==(const ProcessState& o) const {
  return self == o.self && n == o.n && quorums == o.quorums && keys.public_key() == o.keys.public_key() &&
         directory == o.directory && options == o.options && echoes == o.echoes && used_inputs == o.used_inputs &&
         pending == o.pending && history == o.history && signed_requests == o.signed_requests &&
         accusations == o.accusations && accepted_log == o.accepted_log && accusation_log == o.accusation_log;
}

namespace {

bool known_signer(const ProcessState& s, ProcessId p) { return p < s.n && p < s.directory->size(); }

bool signed_by(const ProcessState& s, ProcessId p, const Transaction& tx, const crypto::Signature& sig) {
  return known_signer(s, p) && crypto::verify((*s.directory)[p], tx.encoding(), sig);
}

Message broadcast(const ProcessState& s, std::variant<Req, Echo, Acc> payload) {
  return Message{s.self, ProcessSet::all(s.n), std::move(payload)};
}

void add_to_pending_on_quorum(ProcessState& s, const Transaction& tx) {
  if (s.history.contains(tx.id()) || s.pending.contains(tx.id())) return;
  if (quorum_check(s, tx.id())) s.pending.emplace(tx.id(), tx);
}

// Accusations against the issuer of `fresh` for each stored request it
// conflicts with.
void accuse_against(ProcessState& s, const SignedTx& fresh, std::vector<Message>& out) {
  const auto& stored = s.signed_requests[fresh.tx.issuer()];
  for (const auto& other : stored) {
    if (!ledger::conflicts(fresh.tx, other.tx)) continue;
    Accusation acc(ProcessSet{fresh.tx.issuer()}, {fresh, other});
    if (s.accusations.insert(acc).second) {
      s.accusation_log.push_back(acc);
      out.push_back(broadcast(s, Acc{acc}));
    }
  }
}

// Lines shared by REQ and ECHO: remember the signed request (accusing on
// conflicts), then echo it if none of its inputs has been echoed for this
// issuer yet.
void store_and_maybe_echo(ProcessState& s, const SignedTx& request, std::vector<Message>& out,
                          std::vector<Message>& accusations) {
  const Transaction& tx = request.tx;
  const ProcessId issuer = tx.issuer();
  auto& stored = s.signed_requests[issuer];
  if (!stored.contains(request)) {
    accuse_against(s, request, accusations);
    stored.insert(request);
  }

  auto& used = s.used_inputs[issuer];
  bool fresh_inputs = std::none_of(tx.inputs().begin(), tx.inputs().end(), [&](const TxRef& r) { return used.contains(r); });
#ifdef KSAT_ENABLE_MUTANTS
  if (s.options.skip_used_input_guard) fresh_inputs = !s.echoes[s.self].contains(tx.id());
#endif
  if (!fresh_inputs) return;
  used.insert(tx.inputs().begin(), tx.inputs().end());
  const crypto::Signature mine = crypto::sign(s.keys, tx.encoding());
  out.push_back(broadcast(s, Echo{request, mine}));
  s.echoes[s.self].insert(tx.id());
  add_to_pending_on_quorum(s, tx);
}

std::vector<Message> finish(ProcessState& s, std::vector<Message> out, std::vector<Message> accusations) {
  promote_pending(s);
  out.insert(out.end(), std::make_move_iterator(accusations.begin()), std::make_move_iterator(accusations.end()));
  return out;
}

}  // namespace

std::vector<Message> transfer(ProcessState& s, const Transaction& tx) {
  if (tx.is_genesis() || tx.issuer() != s.self) throw InvalidTransaction("a process may only issue its own transactions");
  for (const auto& in : tx.inputs()) {
    if (!s.history.contains(in)) throw InvalidTransaction("input " + in.short_hex() + " has not been accepted locally");
  }
  if (!ledger::tx_valid(tx, s.history)) throw InvalidTransaction("transaction outputs do not match its inputs");
  const SignedTx request{tx, crypto::sign(s.keys, tx.encoding())};
  return {broadcast(s, Req{request})};
}

std::vector<Message> handle_req(ProcessState& s, const Message& m) {
  const auto* req = std::get_if<Req>(&m.payload);
  if (req == nullptr) return {};
  const SignedTx& request = req->request;
  if (request.tx.is_genesis() || request.tx.issuer() != m.sender) return {};
  if (!signed_by(s, m.sender, request.tx, request.signature)) return {};
  if (s.signed_requests[m.sender].contains(request)) return {};

  std::vector<Message> out;
  std::vector<Message> accusations;
  store_and_maybe_echo(s, request, out, accusations);
  return finish(s, std::move(out), std::move(accusations));
}

std::vector<Message> handle_echo(ProcessState& s, const Message& m) {
  const auto* echo = std::get_if<Echo>(&m.payload);
  if (echo == nullptr) return {};
  const SignedTx& request = echo->request;
  if (request.tx.is_genesis()) return {};
  if (!signed_by(s, m.sender, request.tx, echo->echo_signature)) return {};
  if (!signed_by(s, request.tx.issuer(), request.tx, request.signature)) return {};

  s.echoes[m.sender].insert(request.tx.id());
  std::vector<Message> out;
  std::vector<Message> accusations;
  store_and_maybe_echo(s, request, out, accusations);
  add_to_pending_on_quorum(s, request.tx);
  return finish(s, std::move(out), std::move(accusations));
}

std::vector<Message> handle_acc(ProcessState& s, const Message& m) {
  const auto* acc = std::get_if<Acc>(&m.payload);
  if (acc == nullptr) return {};
  if (s.accusations.contains(acc->accusation)) return {};
  if (!ledger::verify_acc(acc->accusation, *s.directory)) return {};
  s.accusations.insert(acc->accusation);
  s.accusation_log.push_back(acc->accusation);
  return {broadcast(s, Acc{acc->accusation})};
}

std::vector<Message> handle(ProcessState& s, const Message& m) {
  switch (m.kind()) {
    case MessageKind::req:
      return handle_req(s, m);
    case MessageKind::echo:
      return handle_echo(s, m);
    case MessageKind::acc:
      return handle_acc(s, m);
  }
  return {};
}

bool quorum_check(const ProcessState& s, const TxRef& tx) {
  return std::any_of(s.quorums.begin(), s.quorums.end(), [&](trust::Quorum q) {
    bool all = true;
    q.for_each([&](ProcessId member) {
      const auto it = s.echoes.find(member);
      if (it == s.echoes.end() || !it->second.contains(tx)) all = false;
    });
    return all;
  });
}

bool ready(const ProcessState& s, const Transaction& tx) {
  if (tx.is_genesis()) return false;
  const bool inputs_accepted =
      std::all_of(tx.inputs().begin(), tx.inputs().end(), [&](const TxRef& r) { return s.history.contains(r); });
  if (!inputs_accepted) return false;
  if (!ledger::tx_valid(tx, s.history)) return false;
  return std::none_of(s.history.begin(), s.history.end(),
                      [&](const auto& entry) { return ledger::conflicts(tx, entry.second); });
}

void promote_pending(ProcessState& s) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = s.pending.begin(); it != s.pending.end();) {
      if (ready(s, it->second)) {
        s.history.insert(it->second);
        s.accepted_log.push_back(it->first);
        it = s.pending.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
  }
}

std::vector<Message> detect_conflicts(ProcessState& s) {
  std::vector<Message> out;
  for (const auto& [issuer, requests] : s.signed_requests) {
    for (auto a = requests.begin(); a != requests.end(); ++a) {
      for (auto b = std::next(a); b != requests.end(); ++b) {
        if (!ledger::conflicts(a->tx, b->tx)) continue;
        Accusation acc(ProcessSet{issuer}, {*a, *b});
        if (s.accusations.insert(acc).second) {
          s.accusation_log.push_back(acc);
          out.push_back(broadcast(s, Acc{acc}));
        }
      }
    }
  }
  return out;
}

Transition apply(ProcessState s, const Event& e) {
  std::vector<Message> out = std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, TransferCall>) {
          return transfer(s, ev.tx);
        } else {
          return handle(s, ev.message);
        }
      },
      e);
  return Transition{std::move(s), std::move(out)};
}

}  // namespace ksat::protocol
