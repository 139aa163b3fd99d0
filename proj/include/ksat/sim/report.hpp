#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksat/ledger/accusation.hpp"
#include "ksat/ledger/history.hpp"

namespace ksat::sim {

enum class RunStatus { quiescent, nontermination };

enum class TraceKind : std::uint8_t {
  inject = 1,   // scripted Byzantine send placed on the wire
  issue = 2,    // transfer() by a correct process
  deliver = 3,  // message handed to a correct process
  accept = 4,   // transaction added to a local history
  accuse = 5,   // accusation added to a local accusation history
};

/// `subject` is the message digest (inject, deliver), transaction id (issue,
/// accept) or accusation digest (accuse). `peer` is the sender for
/// deliveries and the process itself otherwise.
struct TraceEvent {
  std::uint64_t step = 0;
  TraceKind kind = TraceKind::deliver;
  ProcessId process = 0;
  ProcessId peer = 0;
  crypto::Digest subject;
  bool operator==(const TraceEvent&) const = default;
};

struct ProcessOutcome {
  ProcessId id = 0;
  bool live = false;
  /// Local history, genesis included, ascending by id.
  std::vector<ledger::Transaction> history;
  std::vector<ledger::TxRef> accepted_order;
  /// Accusation history in the order entries were added.
  std::vector<ledger::Accusation> accusations;
  bool operator==(const ProcessOutcome&) const = default;
};

struct IssuedTx {
  std::uint64_t step = 0;
  ledger::Transaction tx;
  bool operator==(const IssuedTx&) const = default;
};

struct GammaSample {
  std::uint64_t step = 0;
  std::size_t gamma = 0;
  bool operator==(const GammaSample&) const = default;
};

enum class Property {
  validity,
  k_spending,
  eventual_conviction,
  accuracy,
  agreement,
  integrity,
  monotonicity,
  termination,
};

inline constexpr Property kAllProperties[] = {
    Property::validity,  Property::k_spending, Property::eventual_conviction, Property::accuracy,
    Property::agreement, Property::integrity,  Property::monotonicity,        Property::termination,
};

std::string_view property_name(Property p);

enum class VerdictStatus { holds, violated, vacuous, inconclusive };

std::string_view verdict_name(VerdictStatus v);

struct Verdict {
  VerdictStatus status = VerdictStatus::inconclusive;
  std::string detail;
  /// Index into RunReport::trace of an event involved in the violation.
  std::optional<std::size_t> trace_index;
  bool operator==(const Verdict&) const = default;
};

using VerdictMap = std::map<Property, Verdict>;

struct RunReport {
  std::string scenario;
  RunStatus status = RunStatus::quiescent;
  std::uint64_t events = 0;
  std::size_t n = 0;
  ProcessSet faulty;
  ProcessSet live;
  std::optional<std::size_t> k_bound;
  ledger::Transaction genesis = ledger::Transaction::genesis({});
  ledger::KeyDirectory public_keys;

  std::vector<ProcessOutcome> correct;
  std::vector<IssuedTx> issued;
  std::vector<TraceEvent> trace;
  std::string trace_hash;

  /// gamma of the correct histories, sampled whenever it changes.
  std::vector<GammaSample> gamma_timeline;
  std::size_t gamma = 0;
  std::optional<std::size_t> cover_number;
  /// Clusters of the minimum cover, as process ids.
  std::vector<std::vector<ProcessId>> clusters;

  /// Channel accounting between correct processes.
  std::uint64_t correct_sends = 0;
  std::uint64_t correct_deliveries = 0;

  VerdictMap verdicts;

  bool operator==(const RunReport&) const = default;

  const ProcessOutcome* outcome(ProcessId p) const;
  /// Final local history of a correct process.
  ledger::History history_of(const ProcessOutcome& o) const;
  /// Final histories of all correct processes, in id order.
  ledger::HistoryCollection correct_histories() const;
  bool any_violation() const;
};

/// SHA-256 over the fixed-width encoding of every trace event.
std::string hash_trace(const std::vector<TraceEvent>& trace);

}  // namespace ksat::sim
