#pragma once

// Naive reference computations for the test suites. They share only the
// value types with the library and recompute everything from definitions.

#include <cstddef>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ksat/ledger/history.hpp"
#include "ksat/sim/report.hpp"
#include "ksat/trust/trust_graph.hpp"
#include "ksat/trust/trust_model.hpp"

namespace ksat::oracle {

using Rng = std::mt19937_64;

/// Largest independent subset of g.nodes, by checking every subset.
std::size_t mis_all_subsets(const trust::TrustGraph& g);

/// Edge (p, q) of G_{F,S}, straight from the definition.
bool edge(const trust::QuorumMap& s, ProcessSet faulty, ProcessId p, ProcessId q);

/// Max independence number over every F in the downward closure of the fault
/// model (or only its maximal sets) and every quorum choice of the correct
/// processes. Exponential; keep models tiny.
std::size_t lambda_brute_force(const trust::TrustModel& m, bool maximal_only = false);

/// gamma over the union of `histories`, by a double loop over (r, tx).
std::size_t gamma_double_loop(const std::vector<std::vector<ledger::Transaction>>& histories);
std::size_t gamma_double_loop(const ledger::HistoryCollection& g);

/// Minimum number of (possibly overlapping) clusters covering g, by trying
/// every family of k compatible subsets for k = 1, 2, ...
std::size_t cover_brute_force(const ledger::HistoryCollection& g);

/// Unordered pairs of conflicting transactions among `txs`, smaller id first.
std::set<std::pair<ledger::TxRef, ledger::TxRef>> conflict_pairs(const std::vector<ledger::Transaction>& txs);

/// gamma of the correct histories after every accept event of the trace,
/// rebuilt from the trace and the final histories.
std::vector<std::size_t> prefix_gammas(const sim::RunReport& r);

/// A random well-formed history: chains of valid spends from a random
/// genesis, then a random dependency-closed subset of them.
ledger::History random_well_formed_history(Rng& rng, std::size_t n, std::size_t max_txs);

/// Random graph on `nodes` out of 0..n-1 with edge probability p.
trust::TrustGraph random_graph(Rng& rng, std::size_t n, double p);

}  // namespace ksat::oracle
