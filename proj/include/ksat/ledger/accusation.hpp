#pragma once

#include <vector>

#include "ksat/crypto/sigscheme.hpp"
#include "ksat/ledger/transaction.hpp"

namespace ksat::ledger {

/// Public keys indexed by process id.
using KeyDirectory = std::vector<crypto::PublicKey>;

/// (AC, P): accused processes and signed transactions proving misbehaviour.
/// The proof is kept sorted by transaction id (then signature) and free of
/// duplicates, so equal accusations compare equal.
class Accusation {
public:
  Accusation() = default;
  Accusation(ProcessSet accused, std::vector<SignedTx> proof);

  ProcessSet accused() const { return accused_; }
  const std::vector<SignedTx>& proof() const { return proof_; }

  /// The proof contains this transaction.
  bool refers_to(const TxRef& ref) const;

  /// SHA-256 over accused bits and the proof entries; used in traces.
  crypto::Digest digest() const;

  bool operator==(const Accusation&) const = default;
  auto operator<=>(const Accusation& o) const {
    if (auto c = accused_.bits() <=> o.accused_.bits(); c != 0) return c;
    return proof_ <=> o.proof_;
  }

private:
  ProcessSet accused_;
  std::vector<SignedTx> proof_;
};

/// True iff AC is nonempty and for every accused p the proof holds at least
/// two distinct transactions issued by p that pairwise share an input, every
/// proof entry is issued by an accused process, and every signature verifies
/// under the issuer's key. Needs no trust-model knowledge.
bool verify_acc(const Accusation& a, const KeyDirectory& keys);

}  // namespace ksat::ledger
