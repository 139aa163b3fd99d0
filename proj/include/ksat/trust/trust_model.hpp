#pragma once

#include <cstddef>
#include <vector>

#include "ksat/core/process_set.hpp"

namespace ksat::trust {

using Quorum = ProcessSet;

/// One quorum per process: S(p) in Q(p).
struct QuorumMap {
  std::vector<Quorum> choice;
  bool operator==(const QuorumMap&) const = default;
  auto operator<=>(const QuorumMap&) const = default;
};

/// Decentralized trust assumptions: a quorum system per process plus a fault
/// model. The fault model is kept as its maximal sets; every subset of a
/// maximal set is an admissible faulty set.
///
/// Construction normalizes the input: quorums of each process are
/// deduplicated and sorted lexicographically, fault sets contained in another
/// fault set are dropped, and an empty fault model becomes {{}}.
class TrustModel {
public:
  /// Throws SchemaError if any structural invariant fails (n out of range,
  /// ids out of range, empty quorum systems or quorums, missing self-inclusion).
  TrustModel(std::size_t n, std::vector<std::vector<Quorum>> quorums,
             std::vector<ProcessSet> fault_model_maximal);

  /// Every process trusts the single quorum of all processes; no faults.
  static TrustModel all_trust(std::size_t n);

  /// All quorums of size q containing their owner; faulty sets of size <= f.
  /// Throws InvalidParameters unless 0 < q <= n, f < q and n <= 24 (the
  /// explicit quorum listing grows as C(n-1, q-1) per process).
  static TrustModel uniform(std::size_t n, std::size_t q, std::size_t f);

  std::size_t size() const { return n_; }
  ProcessSet processes() const { return ProcessSet::all(n_); }
  const std::vector<Quorum>& quorums(ProcessId p) const { return quorums_.at(p); }
  const std::vector<std::vector<Quorum>>& quorum_systems() const { return quorums_; }
  const std::vector<ProcessSet>& fault_model() const { return faults_; }

  /// faulty is a subset of some maximal fault set.
  bool admits(ProcessSet faulty) const;
  bool valid_quorum_map(const QuorumMap& s) const;

  /// Lexicographically first quorum of every process.
  QuorumMap first_quorum_map() const;

  bool operator==(const TrustModel&) const = default;

private:
  std::size_t n_;
  std::vector<std::vector<Quorum>> quorums_;
  std::vector<ProcessSet> faults_;
};

/// p has a quorum disjoint from the faulty set.
bool is_live(const TrustModel& model, ProcessId p, ProcessSet faulty);

}  // namespace ksat::trust
