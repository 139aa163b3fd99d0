#include "ksat/trust/trust_model.hpp"

#include <algorithm>
#include <string>

#include "ksat/core/errors.hpp"

namespace ksat::trust {

namespace {

void sort_unique(std::vector<ProcessSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Visits every k-subset of `ids` as a ProcessSet.
template <typename F>
void for_each_combination(const std::vector<ProcessId>& ids, std::size_t k, F&& f) {
  if (k > ids.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ProcessSet s;
    for (auto i : idx) s.insert(ids[i]);
    f(s);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == ids.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TrustModel::TrustModel(std::size_t n, std::vector<std::vector<Quorum>> quorums,
                       std::vector<ProcessSet> fault_model_maximal)
    : n_(n), quorums_(std::move(quorums)), faults_(std::move(fault_model_maximal)) {
  if (n_ == 0 || n_ > kMaxProcesses) {
    throw SchemaError("process count must be in [1, " + std::to_string(kMaxProcesses) + "]");
  }
  if (quorums_.size() != n_) throw SchemaError("expected one quorum system per process");
  const ProcessSet universe = processes();
  for (ProcessId p = 0; p < n_; ++p) {
    auto& system = quorums_[p];
    if (system.empty()) throw SchemaError(process_label(p) + " has no quorums");
    for (const auto& q : system) {
      if (q.empty()) throw SchemaError(process_label(p) + " has an empty quorum");
      if (!q.subset_of(universe)) throw SchemaError("quorum of " + process_label(p) + " names an unknown process");
      if (!q.contains(p)) throw SchemaError(process_label(p) + " is missing from its own quorum " + q.label());
    }
    sort_unique(system);
  }
  for (const auto& f : faults_) {
    if (!f.subset_of(universe)) throw SchemaError("fault set names an unknown process");
  }
  sort_unique(faults_);
  std::vector<ProcessSet> maximal;
  for (const auto& f : faults_) {
    const bool dominated = std::any_of(faults_.begin(), faults_.end(),
                                       [&](ProcessSet g) { return g != f && f.subset_of(g); });
    if (!dominated) maximal.push_back(f);
  }
  faults_ = maximal.empty() ? std::vector<ProcessSet>{ProcessSet{}} : std::move(maximal);
}

TrustModel TrustModel::all_trust(std::size_t n) {
  return TrustModel(n, std::vector<std::vector<Quorum>>(n, {ProcessSet::all(n)}), {ProcessSet{}});
}

TrustModel TrustModel::uniform(std::size_t n, std::size_t q, std::size_t f) {
  if (q == 0 || q > n || f >= q) throw InvalidParameters("uniform model needs 0 < q <= n and f < q");
  if (n > 24) throw InvalidParameters("explicit uniform models are limited to n <= 24");
  const ProcessSet universe = ProcessSet::all(n);
  std::vector<std::vector<Quorum>> quorums(n);
  for (ProcessId p = 0; p < n; ++p) {
    for_each_combination((universe - ProcessSet{p}).to_vector(), q - 1,
                         [&](ProcessSet s) { quorums[p].push_back(s | ProcessSet{p}); });
  }
  std::vector<ProcessSet> faults;
  for_each_combination(universe.to_vector(), f, [&](ProcessSet s) { faults.push_back(s); });
  return TrustModel(n, std::move(quorums), std::move(faults));
}

bool TrustModel::admits(ProcessSet faulty) const {
  return std::any_of(faults_.begin(), faults_.end(), [&](ProcessSet f) { return faulty.subset_of(f); });
}

bool TrustModel::valid_quorum_map(const QuorumMap& s) const {
  if (s.choice.size() != n_) return false;
  for (ProcessId p = 0; p < n_; ++p) {
    const auto& system = quorums_[p];
    if (!std::binary_search(system.begin(), system.end(), s.choice[p])) return false;
  }
  return true;
}

QuorumMap TrustModel::first_quorum_map() const {
  QuorumMap s;
  s.choice.reserve(n_);
  for (const auto& system : quorums_) s.choice.push_back(system.front());
  return s;
}

bool is_live(const TrustModel& model, ProcessId p, ProcessSet faulty) {
  const auto& system = model.quorums(p);
  return std::any_of(system.begin(), system.end(), [&](Quorum q) { return !q.intersects(faulty); });
}

}  // namespace ksat::trust
