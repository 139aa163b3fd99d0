#pragma once

#include <cstddef>
#include <random>

#include "ksat/sim/scenario.hpp"

namespace ksat::sim {

using Rng = std::mt19937_64;

struct ModelShape {
  std::size_t min_n = 3;
  std::size_t max_n = 6;
  std::size_t max_quorums = 3;
  std::size_t max_fault_sets = 2;
};

/// Random valid trust model: each process gets 1..max_quorums self-including
/// quorums of random density; the fault model has 1..max_fault_sets sets of
/// size below n/2, usually nonempty.
trust::TrustModel random_model(Rng& rng, const ModelShape& shape = {});

struct ScenarioShape {
  std::size_t max_honest_rounds = 2;
  std::size_t max_byzantine_txs = 3;
  std::uint64_t max_events = 200'000;
};

/// Random valid scenario on `model`: a faulty set from the fault model,
/// genesis funding everyone, chains of honest transfers that never
/// double-spend, and Byzantine scripts mixing equivocating REQ and ECHO
/// sends to random subsets, invalid spends, garbage signatures, bogus and
/// genuine accusations. Delivery order is a seeded random scheduler.
Scenario random_scenario(const trust::TrustModel& model, Rng& rng, const ScenarioShape& shape = {});

}  // namespace ksat::sim
