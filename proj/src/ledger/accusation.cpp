#include "ksat/ledger/accusation.hpp"

#include <algorithm>
#include <map>

namespace ksat::ledger {

Accusation::Accusation(ProcessSet accused, std::vector<SignedTx> proof)
    : accused_(accused), proof_(std::move(proof)) {
  std::sort(proof_.begin(), proof_.end());
  proof_.erase(std::unique(proof_.begin(), proof_.end()), proof_.end());
}

bool Accusation::refers_to(const TxRef& ref) const {
  return std::any_of(proof_.begin(), proof_.end(), [&](const SignedTx& e) { return e.tx.id() == ref; });
}

crypto::Digest Accusation::digest() const {
  ByteWriter w;
  w.u64(accused_.bits());
  w.u32(static_cast<std::uint32_t>(proof_.size()));
  for (const auto& e : proof_) {
    w.raw(e.tx.id().bytes);
    w.raw(e.signature);
  }
  return crypto::content_hash(w.bytes());
}

bool verify_acc(const Accusation& a, const KeyDirectory& keys) {
  if (a.accused().empty() || a.proof().empty()) return false;
  std::map<ProcessId, std::vector<const Transaction*>> by_issuer;
  for (const auto& entry : a.proof()) {
    if (entry.tx.is_genesis()) return false;
    const ProcessId p = entry.tx.issuer();
    if (!a.accused().contains(p) || p >= keys.size()) return false;
    if (!crypto::verify(keys[p], entry.tx.encoding(), entry.signature)) return false;
    auto& txs = by_issuer[p];
    if (std::none_of(txs.begin(), txs.end(), [&](const Transaction* t) { return *t == entry.tx; })) {
      txs.push_back(&entry.tx);
    }
  }
  bool ok = true;
  a.accused().for_each([&](ProcessId p) {
    const auto it = by_issuer.find(p);
    if (it == by_issuer.end() || it->second.size() < 2) {
      ok = false;
      return;
    }
    const auto& txs = it->second;
    for (std::size_t i = 0; i < txs.size(); ++i) {
      for (std::size_t j = i + 1; j < txs.size(); ++j) {
        if (!conflicts(*txs[i], *txs[j])) ok = false;
      }
    }
  });
  return ok;
}

}  // namespace ksat::ledger
