#pragma once

#include <cstddef>
#include <cstdint>

#include "ksat/trust/trust_graph.hpp"
#include "ksat/trust/trust_model.hpp"

namespace ksat::trust {

struct SearchOptions {
  /// Cap on search nodes spent on any single faulty set.
  std::uint64_t node_budget = 50'000'000;
  /// Spread maximal faulty sets over OpenMP threads.
  bool parallel = true;
};

/// (F, S, C): C is a maximum independent set of G_{F,S}.
struct InconsistencyWitness {
  ProcessSet faulty;
  QuorumMap quorum_map;
  ProcessSet independent;
  bool operator==(const InconsistencyWitness&) const = default;
};

struct InconsistencyResult {
  std::size_t lambda = 0;
  InconsistencyWitness witness;
  std::uint64_t nodes_explored = 0;
};

/// Largest set C of correct processes, together with one quorum per member,
/// such that the chosen quorums pairwise share no process outside `faulty`.
/// That is exactly the largest independence number over all G_{faulty,S}.
///
/// Depth-first search over processes in ascending id order (take before
/// skip, quorums in lexicographic order); the first optimum found is kept.
/// Throws SizeLimitExceeded carrying the best size found when `node_budget`
/// search nodes have been used.
InconsistencyResult inconsistency_for_faulty_set(const TrustModel& model, ProcessSet faulty,
                                                 const SearchOptions& opts = {});

/// Inconsistency number with a witness, over every faulty set in the
/// downward closure of the fault model. One search per maximal set M covers
/// all F inside M: members of M may join C, and the witness takes
/// F = M - C. Shrinking F adds edges but also adds nodes, so the maximal sets
/// alone do not suffice. Ties between maximal sets go to the first one in
/// fault-model order; processes outside C are assigned their
/// lexicographically first quorum.
InconsistencyResult analyze_inconsistency(const TrustModel& model, const SearchOptions& opts = {});

/// Same search restricted to faulty sets that contain `required`: for every
/// maximal M containing it, the members of `required` never join C. Throws
/// InvalidFaultySet if no maximal set contains `required`.
InconsistencyResult analyze_inconsistency_with(const TrustModel& model, ProcessSet required,
                                               const SearchOptions& opts = {});
std::size_t inconsistency_number(const TrustModel& model, const SearchOptions& opts = {});

/// Throws SizeLimitExceeded like analyze_inconsistency.
InconsistencyWitness max_independent_set_witness(const TrustModel& model, const SearchOptions& opts = {});

/// floor((n - f) / (q - f)) for the uniform model with quorum size q and at
/// most f faults. Throws InvalidParameters unless 0 < q <= n and f < q.
std::size_t uniform_inconsistency(std::size_t n, std::size_t q, std::size_t f);

}  // namespace ksat::trust
