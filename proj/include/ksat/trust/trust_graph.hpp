#pragma once

#include <cstddef>
#include <vector>

#include "ksat/trust/trust_model.hpp"

namespace ksat::trust {

/// G_{F,S}: correct processes, with an edge between p and q iff their chosen
/// quorums share a correct process.
struct TrustGraph {
  std::size_t n = 0;
  ProcessSet nodes;
  ProcessSet faulty;
  QuorumMap quorum_map;
  /// adjacency[p] is empty for p outside `nodes`; no self loops.
  std::vector<ProcessSet> adjacency;

  bool adjacent(ProcessId p, ProcessId q) const { return adjacency.at(p).contains(q); }
  std::size_t edge_count() const;
};

/// Throws InvalidFaultySet if `faulty` is not admitted by the fault model and
/// InvalidQuorumMap if some S(p) is not one of p's quorums.
TrustGraph build_trust_graph(const TrustModel& model, ProcessSet faulty, const QuorumMap& s);

inline constexpr std::size_t kDefaultIndependentSetCap = 24;

/// Exact maximum independent set by branch and bound. Among maximum sets the
/// one returned is deterministic for a given graph. Throws SizeLimitExceeded
/// (partial = 0) when the graph has more than `cap` nodes.
ProcessSet maximum_independent_set(const TrustGraph& g, std::size_t cap = kDefaultIndependentSetCap);

std::size_t independence_number(const TrustGraph& g, std::size_t cap = kDefaultIndependentSetCap);

namespace detail {
/// Maximum independent set restricted to `candidates` over an adjacency table
/// indexed by process id.
ProcessSet max_independent_subset(ProcessSet candidates, const std::vector<ProcessSet>& adjacency);
}  // namespace detail

}  // namespace ksat::trust
