#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "ksat/core/bytes.hpp"
#include "ksat/core/process_set.hpp"
#include "ksat/crypto/sigscheme.hpp"

namespace ksat::ledger {

using Amount = std::uint64_t;
using Timestamp = std::uint64_t;

/// Content hash of a transaction's canonical encoding.
using TxRef = crypto::Digest;

/// tx = (s, tau, I, tm) plus an optional opaque payload.
/// `issuer` is empty for the genesis transaction. Zero entries are dropped
/// from `outputs` so that tau has a single canonical form.
struct TxBody {
  std::optional<ProcessId> issuer;
  std::map<ProcessId, Amount> outputs;
  std::set<TxRef> inputs;
  std::optional<Timestamp> timestamp;
  std::optional<Bytes> message;
};

/// Immutable, cheap to copy. Identity is the SHA-256 of the canonical encoding:
///
///   field(issuer)     u8 tag (0 = genesis, 1 = process) [u32 id]
///   field(outputs)    u32 count, then (u32 id, u64 amount) ascending by id
///   field(inputs)     u32 count, then 32-byte refs ascending
///   field(timestamp)  u8 tag (0 = absent, 1 = present) [u64]
///   field(message)    u8 tag (0 = absent, 1 = present) [bytes]
///
/// where field(x) is a u32 byte length followed by x; all integers big-endian.
/// The same bytes are the signing preimage.
class Transaction {
public:
  explicit Transaction(TxBody body);

  static Transaction genesis(std::map<ProcessId, Amount> outputs);

  const TxBody& body() const { return data_->body; }
  const TxRef& id() const { return data_->id; }
  const Bytes& encoding() const { return data_->encoding; }

  bool is_genesis() const { return !body().issuer.has_value(); }
  /// Throws std::bad_optional_access on the genesis transaction.
  ProcessId issuer() const { return *body().issuer; }
  const std::map<ProcessId, Amount>& outputs() const { return body().outputs; }
  const std::set<TxRef>& inputs() const { return body().inputs; }

  /// tau(p), zero when absent.
  Amount pays(ProcessId p) const;
  /// Sum of outputs; nullopt on overflow.
  std::optional<Amount> out_value() const;

  bool operator==(const Transaction& o) const { return id() == o.id(); }
  auto operator<=>(const Transaction& o) const { return id() <=> o.id(); }

private:
  struct Data {
    TxBody body;
    Bytes encoding;
    TxRef id;
  };
  std::shared_ptr<const Data> data_;
};

Bytes encode(const TxBody& body);

/// Same issuer (not genesis) and a shared input. A transaction does not
/// conflict with itself.
bool conflicts(const Transaction& a, const Transaction& b);

/// A transaction together with its issuer's signature over the encoding.
struct SignedTx {
  Transaction tx;
  crypto::Signature signature{};

  bool operator==(const SignedTx&) const = default;
  auto operator<=>(const SignedTx&) const = default;
};

}  // namespace ksat::ledger
