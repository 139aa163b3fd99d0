#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ksat/core/errors.hpp"
#include "ksat/io/json.hpp"
#include "ksat/sim/attack.hpp"
#include "ksat/sim/simulator.hpp"

namespace ksat::io {
namespace {

TEST(ModelJson, RoundTrip) {
  for (const auto& m : {fixture::split_trust(), fixture::all_trust_one_fault(), trust::TrustModel::uniform(5, 4, 1)}) {
    EXPECT_EQ(model_from_json(model_to_json(m)), m);
  }
  EXPECT_EQ(load_model(fixture::data("models/split_trust.json")), fixture::split_trust());
}

TEST(ModelJson, Rejections) {
  EXPECT_THROW(model_from_json(Json::parse(R"({"n":2})")), SchemaError);
  EXPECT_THROW(model_from_json(Json::parse(R"({"n":2,"quorums":[[[0]],[[0]]],"fault_model_maximal":[]})")),
               SchemaError);
  EXPECT_THROW(model_from_json(Json::parse(R"({"n":1,"quorums":[[[0,4]]],"fault_model_maximal":[]})")), SchemaError);
  EXPECT_THROW(model_from_json(Json::parse(R"({"n":-1,"quorums":[],"fault_model_maximal":[]})")), SchemaError);
  EXPECT_THROW(load_model(fixture::data("models/does_not_exist.json")), SchemaError);
}

TEST(TxJson, RoundTripAndIdCheck) {
  ledger::TxBody b;
  b.issuer = 2;
  b.outputs = {{0, 3}};
  b.inputs = {ledger::Transaction::genesis({{2, 3}}).id()};
  b.timestamp = 4;
  b.message = bytes_of("x");
  const ledger::Transaction t(b);
  EXPECT_EQ(tx_from_json(tx_to_json(t)), t);
  auto j = tx_to_json(t);
  j["id"] = std::string(64, '0');
  EXPECT_THROW(tx_from_json(j), SchemaError);
}

TEST(ReportJson, LosslessRoundTrip) {
  const auto report = sim::run(sim::synthesize_multispend_attack(fixture::split_trust()).scenario);
  EXPECT_EQ(report_from_json(report_to_json(report)), report);
  const auto text = report_summary(report);
  EXPECT_NE(text.find("p3"), std::string::npos);
}

TEST(ScenarioJson, ParseErrors) {
  const auto base = read_json_file(fixture::data("scenarios/double_spend_lambda1.json"));
  auto unknown_label = base;
  unknown_label["honest"] = {"nope"};
  EXPECT_THROW(scenario_from_json(unknown_label, fixture::data("scenarios")), SchemaError);
  auto bad_sched = base;
  bad_sched["scheduler"] = {{"kind", "lifo"}};
  EXPECT_THROW(scenario_from_json(bad_sched, fixture::data("scenarios")), SchemaError);
  auto both = base;
  both["model"] = model_to_json(fixture::split_trust());
  EXPECT_THROW(scenario_from_json(both, fixture::data("scenarios")), SchemaError);
  auto synth = read_json_file(fixture::data("scenarios/split_trust_attack.json"));
  synth["faulty"] = {2};
  EXPECT_THROW(scenario_from_json(synth, fixture::data("scenarios")), SchemaError);
  EXPECT_NO_THROW(scenario_from_json(base, fixture::data("scenarios")));
}

TEST(StateJson, NoSecrets) {
  const auto kp = crypto::KeyPair::derive(crypto::Scheme::hmac_sha512, 1, 0);
  auto dir = std::make_shared<ledger::KeyDirectory>(ledger::KeyDirectory{kp.public_key()});
  protocol::ProcessState s(0, 1, {ProcessSet{0}}, kp, dir, ledger::Transaction::genesis({{0, 1}}));
  const auto j = state_to_json(s);
  EXPECT_TRUE(j.contains("history"));
  EXPECT_EQ(j.dump().find("secret"), std::string::npos);
}

}  // namespace
}  // namespace ksat::io
