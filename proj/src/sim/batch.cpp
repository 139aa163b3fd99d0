#include "ksat/sim/batch.hpp"

#include <exception>
#include <optional>

#include <omp.h>

namespace ksat::sim {

std::vector<RunReport> run_batch(const std::vector<Scenario>& scenarios, const RunOptions& opts, unsigned jobs) {
  const auto count = static_cast<std::ptrdiff_t>(scenarios.size());
  std::vector<std::optional<RunReport>> slots(scenarios.size());
  std::vector<std::exception_ptr> errors(scenarios.size());
  // Runs are already spread over threads; keep each one's model analysis serial.
  RunOptions inner = opts;
  inner.search.parallel = false;
  const int threads = jobs == 0 ? omp_get_max_threads() : static_cast<int>(jobs);

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (count > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      slots[i] = run(scenarios[i], inner);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  std::vector<RunReport> reports;
  reports.reserve(scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    reports.push_back(std::move(*slots[i]));
  }
  return reports;
}

std::vector<RunReport> run_batch_serial(const std::vector<Scenario>& scenarios, const RunOptions& opts) {
  std::vector<RunReport> reports;
  reports.reserve(scenarios.size());
  for (const auto& s : scenarios) reports.push_back(run(s, opts));
  return reports;
}

}  // namespace ksat::sim
