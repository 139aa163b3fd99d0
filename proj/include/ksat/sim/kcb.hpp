#pragma once

#include <map>
#include <optional>
#include <set>

#include "ksat/sim/attack.hpp"
#include "ksat/sim/report.hpp"

namespace ksat::sim {

/// k-consistent broadcast on top of asset transfer: the source broadcasts m
/// by issuing (source, tau, {genesis}, m); a process delivers m when it
/// accepts such a transaction.
struct KcbInstance {
  Scenario scenario;
  ProcessId source = 0;
};

/// Correct source: genesis funds the source, which issues one transaction
/// carrying `value` and paying itself. Throws SchemaError if the source is
/// outside the model.
KcbInstance kcb_broadcast(const trust::TrustModel& model, ProcessId source, const Bytes& value,
                          const KeySpec& keys = {});

/// Byzantine source. When the model admits a multi-spend (|C| >= 2) this is
/// the synthesized attack with a distinct value per target. Otherwise the
/// first process of the first nonempty maximal faulty set sends two
/// conflicting broadcasts to alternating halves of the correct processes,
/// and every faulty process echoes both to everyone. Throws NotVulnerable if
/// no faulty set is admitted at all.
KcbInstance kcb_byzantine_broadcast(const trust::TrustModel& model, const AttackOptions& opts = {});

struct KcbOutcome {
  /// First value delivered by each correct process that delivered one.
  std::map<ProcessId, Bytes> delivered;
  /// M: the distinct delivered values.
  std::set<Bytes> values;
  std::optional<std::size_t> bound;
  /// |M| <= bound (true when no bound is known).
  bool consistent = true;
};

/// Reads deliveries off the accepted order of every correct process: the
/// first accepted transaction by `source` that spends exactly the genesis
/// and carries a message. Later ones are ignored, so each process delivers
/// at most once.
KcbOutcome kcb_collect(const RunReport& report, ProcessId source);

}  // namespace ksat::sim
