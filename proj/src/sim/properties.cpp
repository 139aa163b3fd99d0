#include "ksat/sim/properties.hpp"

#include <algorithm>
#include <set>

#include "ksat/ledger/views.hpp"

namespace ksat::sim {

namespace {

using ledger::Accusation;
using ledger::Transaction;
using ledger::TxRef;

Verdict holds(std::string detail = {}) { return {VerdictStatus::holds, std::move(detail), std::nullopt}; }
Verdict vacuous(std::string detail) { return {VerdictStatus::vacuous, std::move(detail), std::nullopt}; }
Verdict inconclusive(std::string detail) { return {VerdictStatus::inconclusive, std::move(detail), std::nullopt}; }
Verdict violated(std::string detail, std::optional<std::size_t> at) {
  return {VerdictStatus::violated, std::move(detail), at};
}

class Evaluator {
public:
  explicit Evaluator(const RunReport& r) : r_(r) {
    add(r.genesis);
    for (const auto& o : r.correct) {
      for (const auto& tx : o.history) add(tx);
      for (const auto& a : o.accusations) {
        for (const auto& entry : a.proof()) add(entry.tx);
      }
    }
    for (const auto& i : r.issued) add(i.tx);
  }

  VerdictMap evaluate() const {
    VerdictMap v;
    const bool finished = r_.status == RunStatus::quiescent;
    const std::string unfinished = "run stopped before quiescence";
    v[Property::validity] = finished ? validity() : inconclusive(unfinished);
    v[Property::k_spending] = k_spending();
    v[Property::eventual_conviction] = finished ? eventual_conviction() : inconclusive(unfinished);
    v[Property::accuracy] = accuracy();
    v[Property::agreement] = finished ? agreement() : inconclusive(unfinished);
    v[Property::integrity] = integrity();
    v[Property::monotonicity] = monotonicity();
    v[Property::termination] = finished ? termination() : inconclusive(unfinished);
    return v;
  }

private:
  void add(const Transaction& tx) { txs_.emplace(tx.id(), tx); }

  // tx together with everything it transitively spends, as far as known.
  std::set<TxRef> dependency_closure(const TxRef& root) const {
    std::set<TxRef> seen{root};
    std::vector<TxRef> stack{root};
    while (!stack.empty()) {
      const TxRef cur = stack.back();
      stack.pop_back();
      const auto it = txs_.find(cur);
      if (it == txs_.end()) continue;
      for (const auto& in : it->second.inputs()) {
        if (seen.insert(in).second) stack.push_back(in);
      }
    }
    return seen;
  }

  static bool accuses_any(const ProcessOutcome& o, const std::set<TxRef>& refs) {
    return std::any_of(o.accusations.begin(), o.accusations.end(), [&](const Accusation& a) {
      return std::any_of(refs.begin(), refs.end(), [&](const TxRef& t) { return a.refers_to(t); });
    });
  }

  static bool holds_tx(const ProcessOutcome& o, const TxRef& ref) {
    return std::binary_search(o.history.begin(), o.history.end(), ref,
                              [](const auto& a, const auto& b) { return key(a) < key(b); });
  }
  static const TxRef& key(const Transaction& t) { return t.id(); }
  static const TxRef& key(const TxRef& t) { return t; }

  std::optional<std::size_t> find_event(TraceKind kind, std::optional<ProcessId> p, const crypto::Digest& subject) const {
    for (std::size_t i = 0; i < r_.trace.size(); ++i) {
      const auto& e = r_.trace[i];
      if (e.kind == kind && e.subject == subject && (!p || e.process == *p)) return i;
    }
    return std::nullopt;
  }

  // Every live correct process ends up with tx or with an accusation on it or
  // on something it depends on.
  std::optional<std::string> reaches_live(const TxRef& tx, ProcessId& missing) const {
    const auto deps = dependency_closure(tx);
    for (const auto& o : r_.correct) {
      if (!o.live) continue;
      if (holds_tx(o, tx) || accuses_any(o, deps)) continue;
      missing = o.id;
      return process_label(o.id) + " neither accepted " + tx.short_hex() + " nor accused its dependencies";
    }
    return std::nullopt;
  }

  Verdict validity() const {
    if (r_.issued.empty()) return vacuous("no correct process issued a transaction");
    if (r_.live.empty()) return vacuous("no live correct process");
    for (const auto& i : r_.issued) {
      ProcessId missing = 0;
      if (auto why = reaches_live(i.tx.id(), missing)) return violated(*why, find_event(TraceKind::issue, {}, i.tx.id()));
    }
    return holds();
  }

  Verdict termination() const {
    bool any = false;
    for (const auto& o : r_.correct) {
      for (const auto& tx : o.history) {
        if (tx.is_genesis()) continue;
        any = true;
        ProcessId missing = 0;
        if (auto why = reaches_live(tx.id(), missing)) {
          return violated(*why, find_event(TraceKind::accept, o.id, tx.id()));
        }
      }
    }
    if (!any) return vacuous("no transaction was accepted");
    if (r_.live.empty()) return vacuous("no live correct process");
    return holds();
  }

  Verdict k_spending() const {
    if (!r_.k_bound) return inconclusive("no bound available for this model");
    const std::size_t k = *r_.k_bound;
    for (const auto& s : r_.gamma_timeline) {
      if (s.gamma > k) {
        std::optional<std::size_t> at;
        for (std::size_t i = 0; i < r_.trace.size(); ++i) {
          if (r_.trace[i].step == s.step && r_.trace[i].kind == TraceKind::accept) at = i;
        }
        return violated("spending number reached " + std::to_string(s.gamma) + " > k = " + std::to_string(k), at);
      }
    }
    const std::size_t final_gamma = ledger::spending_number(r_.correct_histories());
    if (final_gamma != r_.gamma) {
      return violated("final spending number " + std::to_string(final_gamma) + " disagrees with the timeline",
                      std::nullopt);
    }
    return holds("gamma = " + std::to_string(r_.gamma) + ", k = " + std::to_string(k));
  }

  Verdict eventual_conviction() const {
    bool any = false;
    for (const auto& p : r_.correct) {
      for (const auto& q : r_.correct) {
        for (const auto& tx : p.history) {
          for (const auto& other : q.history) {
            if (!ledger::conflicts(tx, other)) continue;
            any = true;
            for (const auto* o : {&p, &q}) {
              for (const auto* ref : {&tx.id(), &other.id()}) {
                if (!accuses_any(*o, {*ref})) {
                  return violated(process_label(o->id) + " holds no accusation referring to " + ref->short_hex(),
                                  find_event(TraceKind::accept, p.id, tx.id()));
                }
              }
            }
          }
        }
      }
    }
    return any ? holds() : vacuous("no conflicting transactions were accepted");
  }

  Verdict accuracy() const {
    bool any = false;
    for (const auto& o : r_.correct) {
      for (const auto& a : o.accusations) {
        any = true;
        if (!ledger::verify_acc(a, r_.public_keys)) {
          return violated(process_label(o.id) + " stores an accusation that does not verify",
                          find_event(TraceKind::accuse, o.id, a.digest()));
        }
        if (!a.accused().subset_of(r_.faulty)) {
          return violated(process_label(o.id) + " accuses correct processes " + (a.accused() - r_.faulty).label(),
                          find_event(TraceKind::accuse, o.id, a.digest()));
        }
      }
    }
    return any ? holds() : vacuous("no accusations");
  }

  Verdict agreement() const {
    std::set<Accusation> all;
    for (const auto& o : r_.correct) all.insert(o.accusations.begin(), o.accusations.end());
    if (all.empty()) return vacuous("no accusations");
    for (const auto& o : r_.correct) {
      const std::set<Accusation> mine(o.accusations.begin(), o.accusations.end());
      for (const auto& a : all) {
        if (!mine.contains(a)) {
          return violated(process_label(o.id) + " is missing accusation " + a.digest().short_hex(),
                          find_event(TraceKind::accuse, {}, a.digest()));
        }
      }
    }
    return holds();
  }

  Verdict integrity() const {
    const ProcessSet correct = ProcessSet::all(r_.n) - r_.faulty;
    std::map<TxRef, std::size_t> issued_at;
    for (std::size_t i = 0; i < r_.trace.size(); ++i) {
      if (r_.trace[i].kind == TraceKind::issue) issued_at.emplace(r_.trace[i].subject, i);
    }
    bool any = false;
    for (std::size_t i = 0; i < r_.trace.size(); ++i) {
      const auto& e = r_.trace[i];
      if (e.kind != TraceKind::accept) continue;
      const auto it = txs_.find(e.subject);
      if (it == txs_.end() || it->second.is_genesis() || !correct.contains(it->second.issuer())) continue;
      any = true;
      const auto issued = issued_at.find(e.subject);
      if (issued == issued_at.end() || issued->second > i) {
        return violated(process_label(e.process) + " accepted " + e.subject.short_hex() + " before " +
                            process_label(it->second.issuer()) + " issued it",
                        i);
      }
    }
    return any ? holds() : vacuous("no transaction by a correct issuer was accepted");
  }

  Verdict monotonicity() const {
    bool any = false;
    for (const auto& o : r_.correct) {
      std::vector<crypto::Digest> traced;
      std::optional<std::size_t> last;
      for (std::size_t i = 0; i < r_.trace.size(); ++i) {
        if (r_.trace[i].kind == TraceKind::accuse && r_.trace[i].process == o.id) {
          traced.push_back(r_.trace[i].subject);
          last = i;
        }
      }
      std::vector<crypto::Digest> logged;
      for (const auto& a : o.accusations) logged.push_back(a.digest());
      any = any || !logged.empty();
      if (traced != logged) {
        return violated(process_label(o.id) + " final accusation history differs from what it added", last);
      }
      std::set<Accusation> unique(o.accusations.begin(), o.accusations.end());
      if (unique.size() != o.accusations.size()) {
        return violated(process_label(o.id) + " added an accusation twice", last);
      }
    }
    return any ? holds() : vacuous("no accusations");
  }

  const RunReport& r_;
  std::map<TxRef, Transaction> txs_;
};

}  // namespace

VerdictMap evaluate_properties(const RunReport& report) { return Evaluator(report).evaluate(); }

}  // namespace ksat::sim
