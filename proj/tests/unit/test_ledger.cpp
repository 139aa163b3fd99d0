#include <gtest/gtest.h>

#include "ksat/core/errors.hpp"
#include "ksat/ledger/accusation.hpp"
#include "ksat/ledger/views.hpp"
#include "oracles.hpp"

namespace ksat::ledger {
namespace {

Transaction tx(ProcessId issuer, std::map<ProcessId, Amount> outputs, std::set<TxRef> inputs,
               std::optional<Timestamp> ts = std::nullopt) {
  TxBody b;
  b.issuer = issuer;
  b.outputs = std::move(outputs);
  b.inputs = std::move(inputs);
  b.timestamp = ts;
  return Transaction(std::move(b));
}

const Transaction kGenesis = Transaction::genesis({{0, 10}, {1, 3}, {2, 4}});

History history(std::initializer_list<Transaction> txs) {
  History h(kGenesis);
  for (const auto& t : txs) h.insert(t);
  return h;
}

TEST(Transaction, IdentityIsContentHash) {
  const auto a = tx(0, {{1, 4}, {0, 6}}, {kGenesis.id()});
  const auto b = tx(0, {{0, 6}, {1, 4}}, {kGenesis.id()});
  EXPECT_EQ(a.id(), b.id());
  EXPECT_EQ(a.id(), crypto::content_hash(a.encoding()));
  EXPECT_NE(a.id(), tx(0, {{1, 4}, {0, 6}}, {kGenesis.id()}, 1).id());
  EXPECT_EQ(tx(0, {{1, 0}, {0, 6}}, {}).id(), tx(0, {{0, 6}}, {}).id());
}

TEST(Transaction, CanonicalEncodingLayout) {
  TxBody b;
  b.issuer = 1;
  b.outputs = {{2, 5}};
  b.timestamp = 3;
  b.message = bytes_of("hi");
  EXPECT_EQ(to_hex(encode(b)),
            "00000005" "01" "00000001"
            "00000010" "00000001" "00000002" "0000000000000005"
            "00000004" "00000000"
            "00000009" "01" "0000000000000003"
            "00000003" "01" "6869");
}

TEST(InValue, Sums) {
  const auto h = history({});
  EXPECT_EQ(in_value(tx(0, {{1, 10}}, {kGenesis.id()}), h), 10u);
  EXPECT_EQ(in_value(tx(0, {{1, 1}}, {}), h), 0u);
  const auto a = tx(2, {{0, 3}, {2, 1}}, {kGenesis.id()});
  const auto b = tx(1, {{0, 4}}, {kGenesis.id()});
  const auto both = tx(0, {{1, 7}}, {a.id(), b.id()});
  EXPECT_EQ(in_value(both, history({a, b})), 7u);
  EXPECT_THROW(in_value(both, h), UnresolvedInput);
}

TEST(TxValid, ChangeBackToIssuer) {
  const auto h = history({});
  EXPECT_TRUE(tx_valid(tx(0, {{1, 4}, {0, 6}}, {kGenesis.id()}), h));
  EXPECT_FALSE(tx_valid(tx(0, {{1, 0}}, {kGenesis.id()}), h));
  EXPECT_FALSE(tx_valid(tx(0, {{1, 9}}, {kGenesis.id()}), h));
  EXPECT_FALSE(tx_valid(tx(0, {{1, 11}}, {kGenesis.id()}), h));
  EXPECT_TRUE(tx_valid(kGenesis, h));
}

TEST(TxValid, InputMustPayIssuer) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  // p3 spends a transaction that pays it nothing.
  EXPECT_FALSE(tx_valid(tx(2, {{2, 0}}, {a.id()}), history({a})));
}

TEST(Conflicts, Definition) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(0, {{2, 10}}, {kGenesis.id()});
  const auto c = tx(1, {{2, 3}}, {kGenesis.id()});
  const auto d = tx(0, {{2, 1}}, {c.id()});
  EXPECT_TRUE(conflicts(a, b));
  EXPECT_FALSE(conflicts(a, c));
  EXPECT_FALSE(conflicts(a, d));
  EXPECT_FALSE(conflicts(a, a));
}

TEST(WellFormed, GenesisAlone) { EXPECT_TRUE(is_well_formed(history({}))); }

TEST(WellFormed, ReportsEachClause) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(0, {{2, 10}}, {kGenesis.id()});
  const auto child = tx(1, {{2, 10}}, {a.id()});

  const auto missing = check_well_formed(history({child}));
  ASSERT_FALSE(missing.ok());
  EXPECT_EQ(missing.violations.front().clause, Clause::completeness);

  const auto conflict = check_well_formed(history({a, b}));
  ASSERT_FALSE(conflict.ok());
  EXPECT_EQ(conflict.violations.front().clause, Clause::no_conflict);

  const auto invalid = check_well_formed(history({tx(0, {{1, 9}}, {kGenesis.id()})}));
  ASSERT_FALSE(invalid.ok());
  EXPECT_EQ(invalid.violations.front().clause, Clause::t_validity);

  EXPECT_TRUE(is_well_formed(history({a, child})));
}

TEST(WellFormed, TimestampPredecessors) {
  const auto first = tx(0, {{1, 4}, {0, 6}}, {kGenesis.id()}, 1);
  const auto second = tx(0, {{2, 6}}, {first.id()}, 2);
  const auto skip = tx(0, {{2, 6}}, {first.id()}, 3);
  const WellFormedOptions strict{true};
  EXPECT_TRUE(is_well_formed(history({first, second}), strict));
  const auto gap = check_well_formed(history({first, skip}), strict);
  ASSERT_FALSE(gap.ok());
  EXPECT_EQ(gap.violations.front().clause, Clause::predecessor);
  EXPECT_TRUE(is_well_formed(history({first, skip})));
  EXPECT_FALSE(is_well_formed(history({tx(0, {{1, 10}}, {kGenesis.id()})}), strict));
}

TEST(WellFormed, CycleFinder) {
  const TxRef a = crypto::content_hash(bytes_of("a"));
  const TxRef b = crypto::content_hash(bytes_of("b"));
  const TxRef c = crypto::content_hash(bytes_of("c"));
  EXPECT_TRUE(find_cycle({{a, {b}}, {b, {c}}, {c, {a}}}).has_value());
  EXPECT_FALSE(find_cycle({{a, {b}}, {b, {c}}, {a, {c}}}).has_value());
}

TEST(Balance, Arithmetic) {
  const Transaction g = Transaction::genesis({{0, 10}});
  History h(g);
  EXPECT_EQ(balance(h, 0), 10);
  h.insert(tx(0, {{1, 4}, {0, 6}}, {g.id()}));
  EXPECT_EQ(balance(h, 0), 6);
  EXPECT_EQ(balance(h, 1), 4);
  EXPECT_EQ(balance(h, 7), 0);
  History bad(g);
  bad.insert(tx(0, {{1, 10}}, {g.id()}));
  bad.insert(tx(0, {{2, 10}}, {g.id()}));
  EXPECT_THROW(balance(bad, 0), MalformedHistory);
}

TEST(BalanceProperty, NonNegativeOnRandomWellFormedHistories) {
  oracle::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const auto h = oracle::random_well_formed_history(rng, 5, 12);
    ASSERT_TRUE(is_well_formed(h));
    for (ProcessId w = 0; w < 5; ++w) ASSERT_GE(balance(h, w), 0);
  }
}

TEST(Projection, Cases) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(1, {{2, 3}}, {kGenesis.id()});
  EXPECT_TRUE(projection(history({}), 0).empty());
  EXPECT_EQ(projection(history({a}), 0), std::vector<Transaction>{a});
  EXPECT_EQ(projection(history({a, b}), 1), std::vector<Transaction>{b});
}

TEST(SpendingNumber, Cases) {
  EXPECT_EQ(spending_number({history({}), history({})}), 0u);
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(0, {{2, 10}}, {kGenesis.id()});
  EXPECT_EQ(spending_number({history({a}), history({b})}), 2u);
  EXPECT_EQ(spending_number({history({a}), history({a})}), 1u);
  EXPECT_THROW(spending_number({history({a, b})}), MalformedHistory);
}

TEST(Cover, Cases) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(0, {{2, 10}}, {kGenesis.id()});
  EXPECT_EQ(cover_number({history({a}), history({a}), history({a})}).number, 1u);
  EXPECT_EQ(cover_number({history({a}), history({b})}).number, 2u);
  EXPECT_EQ(cover_number({history({}), history({a}), history({b})}).number, 2u);
  EXPECT_EQ(cover_number({}).number, 0u);
  EXPECT_THROW(cover_number(HistoryCollection(13, history({}))), SizeLimitExceeded);
}

// Collections built by letting up to `m` histories pick random subsets of a
// pool of possibly conflicting spends.
HistoryCollection random_collection(oracle::Rng& rng, std::size_t m) {
  std::vector<Transaction> pool;
  for (ProcessId s = 0; s < 3; ++s) {
    const std::size_t spends = rng() % 3;
    for (std::size_t k = 0; k < spends; ++k) {
      pool.push_back(tx(s, {{static_cast<ProcessId>(rng() % 3), kGenesis.pays(s)}}, {kGenesis.id()}));
    }
  }
  HistoryCollection g;
  for (std::size_t i = 0; i < m; ++i) {
    History h(kGenesis);
    std::set<ProcessId> used;
    for (const auto& t : pool) {
      if (rng() % 2 == 0 && used.insert(t.issuer()).second) h.insert(t);
    }
    g.push_back(h);
  }
  return g;
}

TEST(ViewsProperty, MatchOraclesAndBounds) {
  oracle::Rng rng(23);
  for (int i = 0; i < 600; ++i) {
    const auto g = random_collection(rng, 1 + rng() % 5);
    const auto gamma = spending_number(g);
    ASSERT_EQ(gamma, oracle::gamma_double_loop(g));
    ASSERT_LE(gamma, g.size());
    const auto cover = cover_number(g);
    ASSERT_EQ(cover.number, oracle::cover_brute_force(g));
    ASSERT_GE(cover.number, gamma);
    std::vector<bool> seen(g.size(), false);
    for (const auto& cluster : cover.clusters) {
      History merged(kGenesis);
      for (auto idx : cluster) {
        merged.merge(g[idx]);
        seen[idx] = true;
      }
      ASSERT_TRUE(is_well_formed(merged));
    }
    ASSERT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

class Accusations : public ::testing::Test {
protected:
  KeyDirectory keys;
  std::vector<crypto::KeyPair> pairs;
  void SetUp() override {
    for (ProcessId p = 0; p < 3; ++p) {
      pairs.push_back(crypto::KeyPair::derive(crypto::Scheme::ed25519, 1, p));
      keys.push_back(pairs.back().public_key());
    }
  }
  SignedTx signed_by(ProcessId p, const Transaction& t) { return {t, crypto::sign(pairs[p], t.encoding())}; }
};

TEST_F(Accusations, TwoSignedConflictsVerify) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(0, {{2, 10}}, {kGenesis.id()});
  EXPECT_TRUE(verify_acc(Accusation({0}, {signed_by(0, a), signed_by(0, b)}), keys));
  EXPECT_EQ(Accusation({0}, {signed_by(0, a), signed_by(0, b)}), Accusation({0}, {signed_by(0, b), signed_by(0, a)}));
}

TEST_F(Accusations, Rejections) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(0, {{2, 10}}, {kGenesis.id()});
  auto forged = signed_by(0, b);
  forged.signature[0] ^= 1;
  EXPECT_FALSE(verify_acc(Accusation({0}, {signed_by(0, a), forged}), keys));
  EXPECT_FALSE(verify_acc(Accusation({0}, {signed_by(0, a), signed_by(1, b)}), keys));

  const auto c = tx(1, {{2, 3}}, {kGenesis.id()});
  const auto d = tx(0, {{2, 3}}, {c.id()});
  EXPECT_FALSE(verify_acc(Accusation({0}, {signed_by(0, a), signed_by(0, d)}), keys));
  EXPECT_FALSE(verify_acc(Accusation({0}, {signed_by(0, a)}), keys));
  EXPECT_FALSE(verify_acc(Accusation({1}, {signed_by(0, a), signed_by(0, b)}), keys));
  EXPECT_FALSE(verify_acc(Accusation({}, {signed_by(0, a), signed_by(0, b)}), keys));
  EXPECT_FALSE(verify_acc(Accusation({0, 1}, {signed_by(0, a), signed_by(0, b)}), keys));
}

TEST_F(Accusations, JointAccusationNeedsEvidenceForEach) {
  const auto a = tx(0, {{1, 10}}, {kGenesis.id()});
  const auto b = tx(0, {{2, 10}}, {kGenesis.id()});
  const auto c = tx(1, {{0, 3}}, {kGenesis.id()});
  const auto d = tx(1, {{2, 3}}, {kGenesis.id()});
  EXPECT_TRUE(verify_acc(Accusation({0, 1}, {signed_by(0, a), signed_by(0, b), signed_by(1, c), signed_by(1, d)}), keys));
}

}  // namespace
}  // namespace ksat::ledger
