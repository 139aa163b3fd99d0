#pragma once

#include <vector>

#include "ksat/sim/simulator.hpp"

namespace ksat::sim {

/// Runs independent scenarios across OpenMP threads (at most `jobs` when
/// nonzero). Reports come back in input order and equal those of
/// run_batch_serial. If any run throws, the exception of the lowest index is
/// rethrown after all runs finish.
std::vector<RunReport> run_batch(const std::vector<Scenario>& scenarios, const RunOptions& opts = {},
                                 unsigned jobs = 0);

/// One run after another on the calling thread.
std::vector<RunReport> run_batch_serial(const std::vector<Scenario>& scenarios, const RunOptions& opts = {});

}  // namespace ksat::sim
