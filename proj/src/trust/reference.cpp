#include "ksat/trust/reference.hpp"

#include <limits>
#include <set>
#include <vector>

#include "ksat/core/errors.hpp"
#include "ksat/trust/trust_graph.hpp"

namespace ksat::trust::reference {

namespace {

// Every subset of every maximal set, each once.
std::vector<ProcessSet> downward_closure(const TrustModel& model) {
  std::set<std::uint64_t> seen;
  std::vector<ProcessSet> out;
  for (const auto& maximal : model.fault_model()) {
    const std::uint64_t bits = maximal.bits();
    // Standard submask walk, ending with the empty set.
    for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
      if (seen.insert(sub).second) out.push_back(ProcessSet(sub));
      if (sub == 0) break;
    }
  }
  return out;
}

}  // namespace

std::uint64_t enumeration_size(const TrustModel& model) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (const auto& faulty : downward_closure(model)) {
    std::uint64_t product = 1;
    (model.processes() - faulty).for_each([&](ProcessId p) {
      const std::uint64_t k = model.quorums(p).size();
      product = (product > kMax / k) ? kMax : product * k;
    });
    total = (total > kMax - product) ? kMax : total + product;
  }
  return total;
}

std::size_t inconsistency_number_serial(const TrustModel& model, const EnumerationOptions& opts) {
  const std::size_t n = model.size();
  std::size_t best = 0;
  std::uint64_t built = 0;

  for (const auto& faulty : downward_closure(model)) {
    const std::vector<ProcessId> correct = (model.processes() - faulty).to_vector();
    const std::size_t m = correct.size();
    if (m == 0) continue;

    // shares[a][b][i][j]: quorum i of correct[a] and quorum j of correct[b]
    // have a correct process in common.
    std::vector<std::vector<std::vector<std::vector<bool>>>> shares(m, std::vector<std::vector<std::vector<bool>>>(m));
    for (std::size_t a = 0; a < m; ++a) {
      const auto& qa = model.quorums(correct[a]);
      for (std::size_t b = 0; b < m; ++b) {
        const auto& qb = model.quorums(correct[b]);
        shares[a][b].assign(qa.size(), std::vector<bool>(qb.size()));
        for (std::size_t i = 0; i < qa.size(); ++i) {
          for (std::size_t j = 0; j < qb.size(); ++j) shares[a][b][i][j] = !((qa[i] & qb[j]).subset_of(faulty));
        }
      }
    }

    std::vector<std::size_t> pick(m, 0);
    std::vector<ProcessSet> adjacency(n);
    while (true) {
      if (++built > opts.graph_budget) {
        throw SizeLimitExceeded("quorum-map enumeration exceeded its graph budget", best);
      }
      for (auto& row : adjacency) row = ProcessSet{};
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          if (shares[a][b][pick[a]][pick[b]]) {
            adjacency[correct[a]].insert(correct[b]);
            adjacency[correct[b]].insert(correct[a]);
          }
        }
      }
      best = std::max(best, detail::max_independent_subset(model.processes() - faulty, adjacency).size());

      // odometer over the correct processes' quorum indices
      std::size_t a = 0;
      while (a < m && ++pick[a] == model.quorums(correct[a]).size()) pick[a++] = 0;
      if (a == m) break;
    }
  }
  return best;
}

}  // namespace ksat::trust::reference
