#pragma once

#include <optional>
#include <vector>

#include "ksat/sim/scenario.hpp"
#include "ksat/trust/inconsistency.hpp"

namespace ksat::sim {

struct AttackOptions {
  trust::SearchOptions search;
  KeySpec keys;
  /// Funds the genesis gives the source; each spend pays all of it.
  ledger::Amount amount = 1;
  /// Optional payload per target, in ascending target order.
  std::vector<Bytes> messages;
};

/// A multi-spend run built from an inconsistency witness (F, S, C).
struct AttackPlan {
  Scenario scenario;
  trust::InconsistencyWitness witness;
  /// r = min(F), the Byzantine issuer.
  ProcessId source = 0;
  /// One spend of the genesis per member of C, ascending by target.
  std::vector<ProcessId> targets;
  std::vector<ledger::Transaction> spends;
};

/// Source r = min(F) issues one spend of the genesis output per target
/// p_i in C, paying p_i. The REQ for the i-th spend goes to the correct
/// members of S(p_i) only, and every faulty member of S(p_i) echoes that
/// spend to those same processes and nothing else. The adversarial
/// scheduler runs phase {r} + S(p_i) for each target in turn, then fifo.
/// Since the correct parts of the S(p_i) are pairwise disjoint, each p_i
/// collects a full quorum for its own spend before hearing of the others,
/// so the run reaches spending number |C|.
///
/// Throws NotVulnerable when |C| < 2 or F is empty, SizeLimitExceeded when
/// the witness search runs out of budget, InvalidParameters when
/// `messages` is nonempty and its size differs from |C|.
AttackPlan synthesize_multispend_attack(const trust::TrustModel& model, const AttackOptions& opts = {});

}  // namespace ksat::sim
