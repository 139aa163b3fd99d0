#include "ksat/sim/fuzz.hpp"

#include <algorithm>

namespace ksat::sim {

namespace {

using ledger::Amount;
using ledger::Transaction;
using ledger::TxRef;

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

ProcessSet random_subset(Rng& rng, ProcessSet from, double p) {
  ProcessSet out;
  from.for_each([&](ProcessId id) {
    if (coin(rng, p)) out.insert(id);
  });
  return out;
}

ProcessSet nonempty_subset(Rng& rng, ProcessSet from, double p) {
  ProcessSet out = random_subset(rng, from, p);
  if (out.empty() && !from.empty()) {
    const auto ids = from.to_vector();
    out.insert(ids[uniform(rng, 0, ids.size() - 1)]);
  }
  return out;
}

struct Coin {
  TxRef ref;
  Amount amount;
};

// Splits `total` over 1..2 payees chosen from `universe`.
std::map<ProcessId, Amount> split(Rng& rng, Amount total, ProcessSet universe) {
  const auto ids = universe.to_vector();
  std::map<ProcessId, Amount> out;
  const ProcessId a = ids[uniform(rng, 0, ids.size() - 1)];
  const ProcessId b = ids[uniform(rng, 0, ids.size() - 1)];
  const Amount first = total <= 1 ? total : static_cast<Amount>(uniform(rng, 1, total));
  out[a] += first;
  if (total > first) out[b] += total - first;
  return out;
}

Transaction make_tx(ProcessId issuer, std::map<ProcessId, Amount> outputs, std::set<TxRef> inputs) {
  ledger::TxBody body;
  body.issuer = issuer;
  body.outputs = std::move(outputs);
  body.inputs = std::move(inputs);
  return Transaction(std::move(body));
}

}  // namespace

trust::TrustModel random_model(Rng& rng, const ModelShape& shape) {
  const std::size_t n = uniform(rng, shape.min_n, shape.max_n);
  const ProcessSet all = ProcessSet::all(n);
  const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  std::vector<std::vector<trust::Quorum>> quorums(n);
  for (ProcessId p = 0; p < n; ++p) {
    const std::size_t count = uniform(rng, 1, shape.max_quorums);
    for (std::size_t i = 0; i < count; ++i) {
      quorums[p].push_back(random_subset(rng, all - ProcessSet{p}, density) | ProcessSet{p});
    }
  }
  std::vector<ProcessSet> faults;
  const std::size_t sets = uniform(rng, 1, shape.max_fault_sets);
  const std::size_t max_size = std::max<std::size_t>(1, (n - 1) / 2);
  for (std::size_t i = 0; i < sets; ++i) {
    auto ids = all.to_vector();
    std::shuffle(ids.begin(), ids.end(), rng);
    const std::size_t size = coin(rng, 0.1) ? 0 : uniform(rng, 1, max_size);
    faults.push_back(ProcessSet::from_vector({ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(size)}));
  }
  return trust::TrustModel(n, std::move(quorums), std::move(faults));
}

Scenario random_scenario(const trust::TrustModel& model, Rng& rng, const ScenarioShape& shape) {
  const std::size_t n = model.size();
  const ProcessSet all = model.processes();
  const auto& fault_sets = model.fault_model();
  ProcessSet faulty = fault_sets[uniform(rng, 0, fault_sets.size() - 1)];
  if (coin(rng, 0.2)) faulty = random_subset(rng, faulty, 0.5);
  const ProcessSet correct = all - faulty;

  std::map<ProcessId, Amount> funds;
  for (ProcessId p = 0; p < n; ++p) funds[p] = uniform(rng, 1, 4);
  const Transaction genesis = Transaction::genesis(funds);

  Scenario sc(model, genesis);
  sc.name = "fuzz";
  sc.faulty = faulty;
  sc.keys.seed = rng();
  sc.max_events = shape.max_events;
  sc.scheduler.kind = SchedulerKind::random;
  sc.scheduler.seed = rng();

  std::vector<std::vector<Coin>> wallet(n);
  for (const auto& [p, amount] : funds) wallet[p].push_back({genesis.id(), amount});

  // Honest chains: each transfer spends coins its issuer owns so far.
  const std::size_t rounds = uniform(rng, 1, shape.max_honest_rounds);
  for (std::size_t round = 0; round < rounds; ++round) {
    correct.for_each([&](ProcessId p) {
      if (wallet[p].empty() || !coin(rng, 0.6)) return;
      std::shuffle(wallet[p].begin(), wallet[p].end(), rng);
      const std::size_t take = uniform(rng, 1, wallet[p].size());
      std::set<TxRef> inputs;
      Amount total = 0;
      for (std::size_t i = 0; i < take; ++i) {
        inputs.insert(wallet[p][i].ref);
        total += wallet[p][i].amount;
      }
      wallet[p].erase(wallet[p].begin(), wallet[p].begin() + static_cast<std::ptrdiff_t>(take));
      const Transaction tx = make_tx(p, split(rng, total, all), inputs);
      sc.honest.push_back(HonestAction{tx});
      for (const auto& [payee, amount] : tx.outputs()) wallet[payee].push_back({tx.id(), amount});
    });
  }

  const ByzantineSigner signer(sc.keys, faulty);
  auto send = [&](ProcessId owner, ProcessSet to, protocol::Message m) {
    sc.byzantine[owner].sends.push_back(ScriptedSend{to, std::move(m)});
  };
  std::map<ProcessId, std::vector<Transaction>> spends;
  faulty.for_each([&](ProcessId b) {
    if (!coin(rng, 0.85)) return;
    const std::size_t count = uniform(rng, 1, shape.max_byzantine_txs);
    for (std::size_t i = 0; i < count; ++i) {
      const Coin& c = wallet[b][uniform(rng, 0, wallet[b].size() - 1)];
      Amount total = c.amount;
      std::set<TxRef> inputs{c.ref};
      const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
      if (roll < 0.1) {
        total += 1;  // outputs exceed inputs
      } else if (roll < 0.2) {
        inputs.insert(crypto::content_hash(bytes_of("unknown-" + std::to_string(rng()))));
      }
      const Transaction tx = make_tx(b, split(rng, total, all), inputs);
      spends[b].push_back(tx);
      send(b, nonempty_subset(rng, all, 0.5), signer.req(tx));
      faulty.for_each([&](ProcessId echoer) {
        if (coin(rng, 0.6)) send(echoer, random_subset(rng, all, 0.5), signer.echo(echoer, tx));
      });
    }

    if (coin(rng, 0.2)) {
      auto forged = signer.req(spends[b].front());
      auto& req = std::get<protocol::Req>(forged.payload);
      for (auto& byte : req.request.signature) byte = static_cast<std::uint8_t>(rng());
      send(b, random_subset(rng, all, 0.5), std::move(forged));
    }
    if (coin(rng, 0.2) && !correct.empty()) {
      const auto ids = correct.to_vector();
      const ProcessId victim = ids[uniform(rng, 0, ids.size() - 1)];
      std::vector<ledger::SignedTx> proof;
      for (const auto& tx : spends[b]) proof.push_back(signer.signed_tx(tx));
      send(b, all, signer.acc(b, ledger::Accusation(ProcessSet{victim}, proof)));
    }
    if (coin(rng, 0.3) && spends[b].size() >= 2) {
      const auto& x = spends[b][0];
      const auto& y = spends[b][1];
      if (ledger::conflicts(x, y)) {
        send(b, random_subset(rng, all, 0.5),
             signer.acc(b, ledger::Accusation(ProcessSet{b}, {signer.signed_tx(x), signer.signed_tx(y)})));
      }
    }
  });
  return sc;
}

}  // namespace ksat::sim
