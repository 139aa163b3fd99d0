#pragma once

#include <cstddef>
#include <cstdint>

#include "ksat/trust/trust_model.hpp"

namespace ksat::trust::reference {

struct EnumerationOptions {
  /// Cap on the number of graphs G_{F,S} materialized.
  std::uint64_t graph_budget = 2'000'000;
};

/// Number of graphs the literal enumeration visits: for each faulty set in
/// the downward closure of the fault model, the product of the quorum-system sizes of the correct processes.
/// Saturates at UINT64_MAX.
std::uint64_t enumeration_size(const TrustModel& model);

/// Serial reference: builds every G_{F,S} for every faulty set in the
/// downward closure (the choices of faulty processes do not affect the graph and are fixed) and
/// takes the largest exact independence number. Pairwise "share a correct
/// process" checks are tabulated once per faulty set and reused across all
/// quorum maps. Throws SizeLimitExceeded with the maximum seen so far once
/// `graph_budget` graphs have been built.
std::size_t inconsistency_number_serial(const TrustModel& model, const EnumerationOptions& opts = {});

}  // namespace ksat::trust::reference
