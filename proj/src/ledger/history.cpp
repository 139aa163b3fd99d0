#include "ksat/ledger/history.hpp"

#include <functional>

#include "ksat/core/errors.hpp"

namespace ksat::ledger {

History::History(Transaction genesis) : genesis_(std::move(genesis)) { txs_.emplace(genesis_.id(), genesis_); }

bool History::insert(const Transaction& tx) { return txs_.emplace(tx.id(), tx).second; }

const Transaction* History::find(const TxRef& ref) const {
  const auto it = txs_.find(ref);
  return it == txs_.end() ? nullptr : &it->second;
}

void History::merge(const History& other) {
  if (!(other.genesis_ == genesis_)) throw MalformedHistory("cannot merge histories with different genesis transactions");
  txs_.insert(other.txs_.begin(), other.txs_.end());
}

namespace {

// nullopt if some input does not pay the issuer or the sum overflows.
std::optional<Amount> checked_in_value(const Transaction& tx, const History& resolver) {
  Amount total = 0;
  for (const auto& ref : tx.inputs()) {
    const Transaction* input = resolver.find(ref);
    if (input == nullptr) throw UnresolvedInput("input " + ref.short_hex() + " is not in the history");
    const Amount paid = input->pays(tx.issuer());
    if (paid == 0) return std::nullopt;
    if (total + paid < total) return std::nullopt;
    total += paid;
  }
  return total;
}

}  // namespace

Amount in_value(const Transaction& tx, const History& resolver) {
  if (tx.is_genesis()) return 0;
  Amount total = 0;
  for (const auto& ref : tx.inputs()) {
    const Transaction* input = resolver.find(ref);
    if (input == nullptr) throw UnresolvedInput("input " + ref.short_hex() + " is not in the history");
    total += input->pays(tx.issuer());
  }
  return total;
}

bool tx_valid(const Transaction& tx, const History& resolver) {
  if (tx.is_genesis()) return true;
  const auto in = checked_in_value(tx, resolver);
  const auto out = tx.out_value();
  return in && out && *out > 0 && *out == *in;
}

std::string_view clause_name(Clause c) {
  switch (c) {
    case Clause::t_validity:
      return "T-Validity";
    case Clause::completeness:
      return "Completeness";
    case Clause::no_conflict:
      return "No-Conflict";
    case Clause::cycle_freedom:
      return "Cycle-Freedom";
    case Clause::predecessor:
      return "Predecessor";
  }
  return "?";
}

std::optional<TxRef> find_cycle(const std::map<TxRef, std::vector<TxRef>>& edges) {
  enum class Mark { unseen, active, done };
  std::map<TxRef, Mark> mark;
  std::optional<TxRef> hit;
  std::function<bool(const TxRef&)> dfs = [&](const TxRef& node) {
    mark[node] = Mark::active;
    const auto it = edges.find(node);
    if (it != edges.end()) {
      for (const auto& next : it->second) {
        const Mark m = mark.contains(next) ? mark[next] : Mark::unseen;
        if (m == Mark::active) {
          hit = next;
          return true;
        }
        if (m == Mark::unseen && dfs(next)) return true;
      }
    }
    mark[node] = Mark::done;
    return false;
  };
  for (const auto& [node, _] : edges) {
    if (!mark.contains(node) && dfs(node)) return hit;
  }
  return std::nullopt;
}

WellFormedness check_well_formed(const History& h, const WellFormedOptions& opts) {
  WellFormedness report;
  auto flag = [&](Clause c, const TxRef& ref, std::string detail) {
    report.violations.push_back({c, ref, std::move(detail)});
  };

  if (!h.contains(h.genesis().id())) flag(Clause::t_validity, h.genesis().id(), "genesis transaction missing");

  std::map<std::pair<ProcessId, TxRef>, TxRef> spender;
  std::map<TxRef, std::vector<TxRef>> edges;
  for (const auto& [ref, tx] : h) {
    if (tx.is_genesis()) {
      if (!(tx == h.genesis())) flag(Clause::t_validity, ref, "second transaction without an issuer");
      continue;
    }
    bool complete = true;
    for (const auto& in : tx.inputs()) {
      if (!h.contains(in)) {
        flag(Clause::completeness, ref, "input " + in.short_hex() + " missing");
        complete = false;
      } else {
        edges[ref].push_back(in);
      }
    }
    if (complete && !tx_valid(tx, h)) flag(Clause::t_validity, ref, "outputs do not match inputs");

    for (const auto& in : tx.inputs()) {
      const auto [it, fresh] = spender.emplace(std::pair{tx.issuer(), in}, ref);
      if (!fresh) flag(Clause::no_conflict, ref, "shares input " + in.short_hex() + " with " + it->second.short_hex());
    }

    if (opts.check_timestamps) {
      const auto& tm = tx.body().timestamp;
      if (!tm || *tm == 0) {
        flag(Clause::predecessor, ref, "missing timestamp");
      } else if (*tm > 1) {
        bool found = false;
        for (const auto& [_, other] : h) {
          if (!other.is_genesis() && other.issuer() == tx.issuer() && other.body().timestamp == *tm - 1) {
            found = true;
            break;
          }
        }
        if (!found) flag(Clause::predecessor, ref, "no predecessor with timestamp " + std::to_string(*tm - 1));
      }
    }
  }
  if (const auto node = find_cycle(edges)) flag(Clause::cycle_freedom, *node, "dependency cycle");
  return report;
}

std::int64_t balance(const History& h, ProcessId w) {
  if (!is_well_formed(h)) throw MalformedHistory("balance requires a well-formed history");
  std::int64_t total = 0;
  for (const auto& [_, tx] : h) {
    total += static_cast<std::int64_t>(tx.pays(w));
    if (!tx.is_genesis() && tx.issuer() == w) total -= static_cast<std::int64_t>(*tx.out_value());
  }
  return total;
}

std::vector<Transaction> projection(const History& h, ProcessId r) {
  std::vector<Transaction> out;
  for (const auto& [_, tx] : h) {
    if (!tx.is_genesis() && tx.issuer() == r) out.push_back(tx);
  }
  return out;
}

}  // namespace ksat::ledger
