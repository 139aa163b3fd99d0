#include "ksat/trust/inconsistency.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <vector>

#include <omp.h>

#include "ksat/core/errors.hpp"

namespace ksat::trust {

namespace {

// Finds the largest C with one quorum per member such that, with
// F = bound - C, every pair of chosen quorums meets only inside F. That holds
// iff the chosen quorums are pairwise disjoint outside `bound` and no member
// of C lies in another member's quorum. Only `candidates` may join C.
class DisjointQuorumSearch {
public:
  DisjointQuorumSearch(const TrustModel& model, ProcessSet bound, ProcessSet candidates, std::uint64_t budget)
      : bound_(bound), budget_(budget), chosen_quorum_(model.size()), best_quorum_(model.size()) {
    candidates.for_each([&](ProcessId p) {
      order_.push_back(p);
      options_.push_back(model.quorums(p));
    });
  }

  void run() { visit(0, ProcessSet{}, ProcessSet{}); }

  std::size_t best_size() const { return best_.size(); }
  ProcessSet best_set() const { return best_; }
  Quorum best_quorum(ProcessId p) const { return best_quorum_[p]; }
  std::uint64_t nodes() const { return nodes_; }

private:
  // `covered` is the union of the chosen quorums.
  void visit(std::size_t i, ProcessSet covered, ProcessSet taken) {
    if (++nodes_ > budget_) {
      throw SizeLimitExceeded("inconsistency search exceeded its node budget for faulty set " + bound_.label(),
                              best_.size());
    }
    // Processes inside a chosen quorum cannot join C.
    std::size_t open = 0;
    for (std::size_t j = i; j < order_.size(); ++j) open += covered.contains(order_[j]) ? 0 : 1;
    if (taken.size() + open <= best_.size()) return;
    if (i == order_.size()) {
      best_ = taken;
      taken.for_each([&](ProcessId p) { best_quorum_[p] = chosen_quorum_[p]; });
      return;
    }
    const ProcessId p = order_[i];
    if (!covered.contains(p)) {
      const ProcessSet outside = covered - bound_;
      for (const auto& q : options_[i]) {
        if ((q - bound_).intersects(outside) || q.intersects(taken)) continue;
        chosen_quorum_[p] = q;
        ProcessSet next = taken;
        next.insert(p);
        visit(i + 1, covered | q, next);
      }
    }
    visit(i + 1, covered, taken);
  }

  ProcessSet bound_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<ProcessId> order_;
  std::vector<std::vector<Quorum>> options_;
  std::vector<Quorum> chosen_quorum_;
  ProcessSet best_;
  std::vector<Quorum> best_quorum_;
};

InconsistencyResult search(const TrustModel& model, ProcessSet bound, ProcessSet candidates,
                           const SearchOptions& opts) {
  DisjointQuorumSearch search(model, bound, candidates, opts.node_budget);
  search.run();

  InconsistencyResult r;
  r.lambda = search.best_size();
  r.nodes_explored = search.nodes();
  r.witness.faulty = bound - search.best_set();
  r.witness.independent = search.best_set();
  r.witness.quorum_map = model.first_quorum_map();
  search.best_set().for_each([&](ProcessId p) { r.witness.quorum_map.choice[p] = search.best_quorum(p); });
  return r;
}

}  // namespace

InconsistencyResult inconsistency_for_faulty_set(const TrustModel& model, ProcessSet faulty, const SearchOptions& opts) {
  if (!faulty.subset_of(model.processes())) throw InvalidFaultySet("faulty set names an unknown process");
  return search(model, faulty, model.processes() - faulty, opts);
}

namespace {

// One search per maximal set containing `required`, members of `required`
// kept out of C.
InconsistencyResult search_closure(const TrustModel& model, ProcessSet required, const SearchOptions& opts) {
  std::vector<ProcessSet> faults;
  for (const auto& m : model.fault_model()) {
    if (required.subset_of(m)) faults.push_back(m);
  }
  if (faults.empty()) throw InvalidFaultySet("no admitted faulty set contains " + required.label());
  const auto count = static_cast<std::ptrdiff_t>(faults.size());
  std::vector<std::optional<InconsistencyResult>> per_set(faults.size());
  std::vector<std::size_t> partial(faults.size(), 0);
  std::vector<std::exception_ptr> failures(faults.size());

#pragma omp parallel for schedule(dynamic) if (opts.parallel && count > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      per_set[i] = search(model, faults[i], model.processes() - required, opts);
    } catch (const SizeLimitExceeded& e) {
      partial[i] = e.partial();
      failures[i] = std::current_exception();
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }

  std::size_t best_partial = 0;
  InconsistencyResult best;
  bool have_best = false;
  std::exception_ptr first_failure;
  for (std::size_t i = 0; i < faults.size(); ++i) {
    if (failures[i]) {
      if (!first_failure) first_failure = failures[i];
      best_partial = std::max(best_partial, partial[i]);
      continue;
    }
    best_partial = std::max(best_partial, per_set[i]->lambda);
    if (!have_best || per_set[i]->lambda > best.lambda) {
      const std::uint64_t explored = best.nodes_explored;
      best = *per_set[i];
      best.nodes_explored += explored;
      have_best = true;
    } else {
      best.nodes_explored += per_set[i]->nodes_explored;
    }
  }
  if (first_failure) {
    try {
      std::rethrow_exception(first_failure);
    } catch (const SizeLimitExceeded& e) {
      throw SizeLimitExceeded(e.what(), best_partial);
    }
  }
  return best;
}

}  // namespace

InconsistencyResult analyze_inconsistency(const TrustModel& model, const SearchOptions& opts) {
  return search_closure(model, ProcessSet{}, opts);
}

InconsistencyResult analyze_inconsistency_with(const TrustModel& model, ProcessSet required,
                                               const SearchOptions& opts) {
  return search_closure(model, required, opts);
}

std::size_t inconsistency_number(const TrustModel& model, const SearchOptions& opts) {
  return analyze_inconsistency(model, opts).lambda;
}

InconsistencyWitness max_independent_set_witness(const TrustModel& model, const SearchOptions& opts) {
  return analyze_inconsistency(model, opts).witness;
}

std::size_t uniform_inconsistency(std::size_t n, std::size_t q, std::size_t f) {
  if (q == 0 || q > n || f >= q) throw InvalidParameters("closed form needs 0 < q <= n and f < q");
  return (n - f) / (q - f);
}

}  // namespace ksat::trust
