#include "ksat/sim/simulator.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <random>
#include <set>

#include "ksat/core/errors.hpp"
#include "ksat/ledger/views.hpp"
#include "ksat/sim/properties.hpp"

namespace ksat::sim {

namespace {

struct Envelope {
  std::uint64_t seq;
  std::shared_ptr<const protocol::Message> message;
  crypto::Digest digest;
  ProcessId recipient;
};

class Scheduler {
public:
  explicit Scheduler(const SchedulerSpec& spec) : spec_(spec), rng_(spec.seed) {}

  // Index into `inflight` (kept in send order) of the next delivery.
  std::size_t pick(const std::vector<Envelope>& inflight) {
    switch (spec_.kind) {
      case SchedulerKind::fifo:
        return 0;
      case SchedulerKind::random:
        return static_cast<std::size_t>(rng_() % inflight.size());
      case SchedulerKind::adversarial:
        while (phase_ < spec_.phases.size()) {
          const ProcessSet part = spec_.phases[phase_];
          for (std::size_t i = 0; i < inflight.size(); ++i) {
            if (part.contains(inflight[i].message->sender) && part.contains(inflight[i].recipient)) return i;
          }
          ++phase_;
        }
        return 0;
    }
    return 0;
  }

private:
  SchedulerSpec spec_;
  std::mt19937_64 rng_;
  std::size_t phase_ = 0;
};

// Incremental gamma over the correct histories: spenders per (issuer, input).
class SpendingTracker {
public:
  bool record(const ledger::Transaction& tx) {
    if (tx.is_genesis()) return false;
    bool grew = false;
    for (const auto& in : tx.inputs()) {
      auto& spenders = spends_[{tx.issuer(), in}];
      spenders.insert(tx.id());
      if (spenders.size() > gamma_) {
        gamma_ = spenders.size();
        grew = true;
      }
    }
    return grew;
  }
  std::size_t gamma() const { return gamma_; }

private:
  std::map<std::pair<ProcessId, ledger::TxRef>, std::set<ledger::TxRef>> spends_;
  std::size_t gamma_ = 0;
};

class Simulation {
public:
  Simulation(const Scenario& sc, const RunOptions& opts) : sc_(sc), opts_(opts), scheduler_(sc.scheduler) {
    const std::size_t n = sc.model.size();
    auto directory = std::make_shared<ledger::KeyDirectory>();
    std::vector<crypto::KeyPair> keys;
    for (ProcessId p = 0; p < n; ++p) {
      keys.push_back(crypto::KeyPair::derive(sc.keys.scheme, sc.keys.seed, p));
      directory->push_back(keys.back().public_key());
    }
    correct_ = sc.model.processes() - sc.faulty;
    states_.resize(n);
    correct_.for_each([&](ProcessId p) {
      states_[p] = std::make_unique<protocol::ProcessState>(p, n, sc.model.quorums(p), keys[p], directory, sc.genesis,
                                                            sc.engine);
    });
    cursors_.assign(n, {0, 0});
    issued_.assign(sc.honest.size(), false);

    report_.scenario = sc.name;
    report_.n = n;
    report_.faulty = sc.faulty;
    report_.genesis = sc.genesis;
    report_.public_keys = *directory;
    correct_.for_each([&](ProcessId p) {
      if (trust::is_live(sc.model, p, sc.faulty)) report_.live.insert(p);
    });
  }

  RunReport run() {
    inject_scripts();
    while (true) {
      if (fire_enabled_actions()) continue;
      if (inflight_.empty()) {
        report_.status = RunStatus::quiescent;
        break;
      }
      if (report_.events >= sc_.max_events) {
        report_.status = RunStatus::nontermination;
        break;
      }
      deliver_one();
    }
    finish();
    return std::move(report_);
  }

private:
  void trace(TraceKind kind, ProcessId process, ProcessId peer, const crypto::Digest& subject) {
    report_.trace.push_back(TraceEvent{report_.events, kind, process, peer, subject});
  }

  void enqueue(protocol::Message m, ProcessSet to) {
    m.recipients = to;
    auto shared = std::make_shared<const protocol::Message>(std::move(m));
    const crypto::Digest d = protocol::digest(*shared);
    const bool from_correct = correct_.contains(shared->sender);
    (to & correct_).for_each([&](ProcessId r) {
      inflight_.push_back(Envelope{next_seq_++, shared, d, r});
      if (from_correct) ++report_.correct_sends;
    });
  }

  void inject_scripts() {
    for (const auto& [owner, script] : sc_.byzantine) {
      for (const auto& send : script.sends) {
        trace(TraceKind::inject, owner, owner, protocol::digest(send.message));
        enqueue(send.message, send.to);
      }
    }
  }

  bool fire_enabled_actions() {
    for (std::size_t i = 0; i < sc_.honest.size(); ++i) {
      if (issued_[i]) continue;
      const auto& tx = sc_.honest[i].tx;
      auto& state = *states_[tx.issuer()];
      const bool enabled = std::all_of(tx.inputs().begin(), tx.inputs().end(),
                                       [&](const ledger::TxRef& r) { return state.history.contains(r); });
      if (!enabled || report_.events >= sc_.max_events) continue;
      issued_[i] = true;
      ++report_.events;
      trace(TraceKind::issue, tx.issuer(), tx.issuer(), tx.id());
      report_.issued.push_back(IssuedTx{report_.events, tx});
      for (auto& m : protocol::transfer(state, tx)) enqueue(std::move(m), ProcessSet::all(sc_.model.size()));
      observe(tx.issuer());
      return true;
    }
    return false;
  }

  void deliver_one() {
    const std::size_t idx = scheduler_.pick(inflight_);
    Envelope env = std::move(inflight_[idx]);
    inflight_.erase(inflight_.begin() + static_cast<std::ptrdiff_t>(idx));
    ++report_.events;
    if (correct_.contains(env.message->sender)) ++report_.correct_deliveries;
    trace(TraceKind::deliver, env.recipient, env.message->sender, env.digest);
    auto out = protocol::handle(*states_[env.recipient], *env.message);
    for (auto& m : out) {
      const ProcessSet to = m.recipients;
      enqueue(std::move(m), to);
    }
    observe(env.recipient);
  }

  // Emits accept/accuse trace entries for whatever p appended to its logs.
  void observe(ProcessId p) {
    auto& state = *states_[p];
    assert(ledger::is_well_formed(state.history));
    auto& [accepted, accused] = cursors_[p];
    for (; accepted < state.accepted_log.size(); ++accepted) {
      const auto& ref = state.accepted_log[accepted];
      trace(TraceKind::accept, p, p, ref);
      if (tracker_.record(*state.history.find(ref))) {
        report_.gamma_timeline.push_back(GammaSample{report_.events, tracker_.gamma()});
      }
    }
    for (; accused < state.accusation_log.size(); ++accused) {
      trace(TraceKind::accuse, p, p, state.accusation_log[accused].digest());
    }
  }

  void finish() {
    correct_.for_each([&](ProcessId p) {
      const auto& state = *states_[p];
      ProcessOutcome o;
      o.id = p;
      o.live = report_.live.contains(p);
      for (const auto& [_, tx] : state.history) o.history.push_back(tx);
      o.accepted_order = state.accepted_log;
      o.accusations = state.accusation_log;
      report_.correct.push_back(std::move(o));
    });
    report_.gamma = tracker_.gamma();
    report_.trace_hash = hash_trace(report_.trace);

    const auto histories = report_.correct_histories();
    if (histories.size() <= ledger::kDefaultCoverCap) {
      const auto cover = ledger::cover_number(histories);
      report_.cover_number = cover.number;
      for (const auto& cluster : cover.clusters) {
        std::vector<ProcessId> ids;
        for (auto i : cluster) ids.push_back(report_.correct[i].id);
        report_.clusters.push_back(std::move(ids));
      }
    }

    if (sc_.k_bound) {
      report_.k_bound = sc_.k_bound;
    } else {
      try {
        report_.k_bound = trust::inconsistency_number(sc_.model, opts_.search);
      } catch (const SizeLimitExceeded&) {
        report_.k_bound.reset();
      }
    }
    report_.verdicts = evaluate_properties(report_);
  }

  const Scenario& sc_;
  const RunOptions& opts_;
  Scheduler scheduler_;
  ProcessSet correct_;
  std::vector<std::unique_ptr<protocol::ProcessState>> states_;
  std::vector<std::pair<std::size_t, std::size_t>> cursors_;
  std::vector<bool> issued_;
  std::vector<Envelope> inflight_;
  std::uint64_t next_seq_ = 0;
  SpendingTracker tracker_;
  RunReport report_;
};

}  // namespace

RunReport run(const Scenario& scenario, const RunOptions& opts) {
  validate(scenario);
  return Simulation(scenario, opts).run();
}

}  // namespace ksat::sim
