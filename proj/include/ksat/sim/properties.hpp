#pragma once

#include "ksat/sim/report.hpp"

namespace ksat::sim {

/// One verdict per asset-transfer property, computed from the report alone.
/// Liveness properties (Validity, Termination, Agreement, Eventual
/// Conviction) are judged at the end of the run and come out inconclusive
/// when the run did not reach quiescence. k-Spending is inconclusive when the
/// report carries no bound.
VerdictMap evaluate_properties(const RunReport& report);

}  // namespace ksat::sim
