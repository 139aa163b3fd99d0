#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ksat/ledger/transaction.hpp"

namespace ksat::ledger {

/// A set of transactions that always contains its genesis transaction.
class History {
public:
  explicit History(Transaction genesis);

  const Transaction& genesis() const { return genesis_; }

  /// Returns false if the transaction was already present.
  bool insert(const Transaction& tx);
  bool contains(const TxRef& ref) const { return txs_.contains(ref); }
  const Transaction* find(const TxRef& ref) const;

  std::size_t size() const { return txs_.size(); }
  auto begin() const { return txs_.begin(); }
  auto end() const { return txs_.end(); }

  /// Every transaction of `other` added to this history. Genesis must match.
  void merge(const History& other);

  bool operator==(const History& o) const { return genesis_ == o.genesis_ && txs_ == o.txs_; }

private:
  Transaction genesis_;
  std::map<TxRef, Transaction> txs_;
};

using HistoryCollection = std::vector<History>;

/// Sum over inputs of what each pays the issuer. Throws UnresolvedInput.
Amount in_value(const Transaction& tx, const History& resolver);

/// outValue > 0, outValue == inValue, and every input pays the issuer. The
/// genesis transaction is valid by fiat. Throws UnresolvedInput.
bool tx_valid(const Transaction& tx, const History& resolver);

enum class Clause { t_validity, completeness, no_conflict, cycle_freedom, predecessor };

std::string_view clause_name(Clause c);

struct Violation {
  Clause clause;
  TxRef tx;
  std::string detail;
};

struct WellFormedness {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

struct WellFormedOptions {
  /// Require timestamps on non-genesis transactions and a predecessor (same
  /// issuer, timestamp - 1) for every timestamp above 1.
  bool check_timestamps = false;
};

WellFormedness check_well_formed(const History& h, const WellFormedOptions& opts = {});
inline bool is_well_formed(const History& h, const WellFormedOptions& opts = {}) {
  return check_well_formed(h, opts).ok();
}

/// Incoming minus outgoing stake of w. Throws MalformedHistory if h is not
/// well-formed.
std::int64_t balance(const History& h, ProcessId w);

/// Transactions of h issued by r, ascending by id.
std::vector<Transaction> projection(const History& h, ProcessId r);

/// Dependency check used by the Cycle-Freedom clause, exposed for testing:
/// `edges` maps a node to the nodes it takes as inputs. Returns a node on a
/// cycle if one exists.
std::optional<TxRef> find_cycle(const std::map<TxRef, std::vector<TxRef>>& edges);

}  // namespace ksat::ledger
