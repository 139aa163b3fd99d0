#pragma once

#include "ksat/sim/report.hpp"
#include "ksat/sim/scenario.hpp"
#include "ksat/trust/inconsistency.hpp"

namespace ksat::sim {

struct RunOptions {
  /// Used to compute the k-Spending bound when the scenario leaves it unset.
  trust::SearchOptions search;
};

/// Runs the scenario to quiescence (nothing in flight, no honest action
/// enabled) or until `max_events` issue/deliver events have happened, in
/// which case the report has status nontermination and carries the partial
/// trace. Deterministic in the scenario: same inputs, same trace hash.
///
/// Only correct processes run the protocol. Messages addressed to faulty
/// processes are dropped on send (the adversary sees them anyway), so every
/// message between correct processes is delivered exactly once before
/// quiescence. Throws SchemaError if validate() rejects the scenario.
RunReport run(const Scenario& scenario, const RunOptions& opts = {});

}  // namespace ksat::sim
