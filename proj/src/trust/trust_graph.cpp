#include "ksat/trust/trust_graph.hpp"

#include "ksat/core/errors.hpp"

namespace ksat::trust {

std::size_t TrustGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.size();
  return twice / 2;
}

TrustGraph build_trust_graph(const TrustModel& model, ProcessSet faulty, const QuorumMap& s) {
  if (!model.admits(faulty)) throw InvalidFaultySet("faulty set " + faulty.label() + " is not admitted by the fault model");
  if (!model.valid_quorum_map(s)) throw InvalidQuorumMap("quorum map picks a quorum outside some process's quorum system");

  TrustGraph g;
  g.n = model.size();
  g.faulty = faulty;
  g.nodes = model.processes() - faulty;
  g.quorum_map = s;
  g.adjacency.assign(g.n, ProcessSet{});
  g.nodes.for_each([&](ProcessId p) {
    const ProcessSet correct_p = s.choice[p] - faulty;
    g.nodes.for_each([&](ProcessId q) {
      if (q != p && correct_p.intersects(s.choice[q])) g.adjacency[p].insert(q);
    });
  });
  return g;
}

namespace detail {

namespace {

struct MisSearch {
  const std::vector<ProcessSet>& adjacency;
  ProcessSet best;

  void run(ProcessSet candidates, ProcessSet chosen) {
    // Vertices with at most one remaining neighbour can always be taken.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (ProcessSet rest = candidates; !rest.empty();) {
        const ProcessId v = rest.front();
        rest.erase(v);
        const ProcessSet nbrs = adjacency[v] & candidates;
        if (nbrs.size() <= 1) {
          chosen.insert(v);
          candidates -= nbrs;
          candidates.erase(v);
          rest -= nbrs;
          reduced = true;
        }
      }
    }
    if (candidates.empty()) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (chosen.size() + candidates.size() <= best.size()) return;
    // Branch on the highest-degree vertex, lowest id first among ties.
    ProcessId pivot = candidates.front();
    std::size_t pivot_degree = 0;
    candidates.for_each([&](ProcessId v) {
      const std::size_t d = (adjacency[v] & candidates).size();
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });
    ProcessSet with = chosen;
    with.insert(pivot);
    run(candidates - adjacency[pivot] - ProcessSet{pivot}, with);
    run(candidates - ProcessSet{pivot}, chosen);
  }
};

}  // namespace

ProcessSet max_independent_subset(ProcessSet candidates, const std::vector<ProcessSet>& adjacency) {
  MisSearch search{adjacency, ProcessSet{}};
  search.run(candidates, ProcessSet{});
  return search.best;
}

}  // namespace detail

ProcessSet maximum_independent_set(const TrustGraph& g, std::size_t cap) {
  if (g.nodes.size() > cap) {
    throw SizeLimitExceeded("graph has " + std::to_string(g.nodes.size()) + " nodes, above the exact-search cap of " +
                                std::to_string(cap),
                            0);
  }
  return detail::max_independent_subset(g.nodes, g.adjacency);
}

std::size_t independence_number(const TrustGraph& g, std::size_t cap) { return maximum_independent_set(g, cap).size(); }

}  // namespace ksat::trust
