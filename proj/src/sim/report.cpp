#include "ksat/sim/report.hpp"

#include <algorithm>

namespace ksat::sim {

std::string_view property_name(Property p) {
  switch (p) {
    case Property::validity:
      return "Validity";
    case Property::k_spending:
      return "k-Spending";
    case Property::eventual_conviction:
      return "Eventual Conviction";
    case Property::accuracy:
      return "Accuracy";
    case Property::agreement:
      return "Agreement";
    case Property::integrity:
      return "Integrity";
    case Property::monotonicity:
      return "Monotonicity";
    case Property::termination:
      return "Termination";
  }
  return "?";
}

std::string_view verdict_name(VerdictStatus v) {
  switch (v) {
    case VerdictStatus::holds:
      return "holds";
    case VerdictStatus::violated:
      return "violated";
    case VerdictStatus::vacuous:
      return "vacuous";
    case VerdictStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

const ProcessOutcome* RunReport::outcome(ProcessId p) const {
  const auto it = std::find_if(correct.begin(), correct.end(), [&](const ProcessOutcome& o) { return o.id == p; });
  return it == correct.end() ? nullptr : &*it;
}

ledger::History RunReport::history_of(const ProcessOutcome& o) const {
  ledger::History h(genesis);
  for (const auto& tx : o.history) h.insert(tx);
  return h;
}

ledger::HistoryCollection RunReport::correct_histories() const {
  ledger::HistoryCollection g;
  g.reserve(correct.size());
  for (const auto& o : correct) g.push_back(history_of(o));
  return g;
}

bool RunReport::any_violation() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const auto& kv) { return kv.second.status == VerdictStatus::violated; });
}

std::string hash_trace(const std::vector<TraceEvent>& trace) {
  ByteWriter w;
  for (const auto& e : trace) {
    w.u64(e.step);
    w.u8(static_cast<std::uint8_t>(e.kind));
    w.u32(e.process);
    w.u32(e.peer);
    w.raw(e.subject.bytes);
  }
  return crypto::content_hash(w.bytes()).hex();
}

}  // namespace ksat::sim
