#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ksat/protocol/replica.hpp"
#include "ksat/sim/report.hpp"
#include "ksat/sim/scenario.hpp"
#include "ksat/trust/inconsistency.hpp"
#include "ksat/trust/trust_model.hpp"

namespace ksat::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws SchemaError on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

/// {"n": int, "quorums": [[[ids...], ...] per process], "fault_model_maximal": [[ids...], ...]}
/// with 0-based ids. Every malformed input, including violated model
/// invariants, throws SchemaError.
Json model_to_json(const trust::TrustModel& model);
trust::TrustModel model_from_json(const Json& j);
trust::TrustModel load_model(const std::filesystem::path& path);

Json tx_to_json(const ledger::Transaction& tx);
/// Rejects entries whose "id" does not match the content.
ledger::Transaction tx_from_json(const Json& j);

Json witness_to_json(const trust::InconsistencyWitness& w);

/// Scenario file:
///
///   name          optional string
///   model         embedded model, or
///   model_file    path relative to `base_dir`
///   faulty        [ids]
///   genesis       [[id, amount], ...]
///   keys          {"scheme": "ed25519" | "hmac-sha512", "seed": u64}
///   transactions  [{"label", "issuer", "inputs": ["genesis" | label | hex ref],
///                   "outputs": [[id, amount]], "message"?: string, "timestamp"?: u64}]
///   honest        [label, ...]              transfer() calls in order
///   byzantine     "synthesized-multispend" or a list of sends
///                 {"from", "to": [ids], "type": "req" | "echo" | "acc", ...}
///                 req/echo name a "tx" label; acc gives "accused" and
///                 "proof" labels. "signature", "echo_signature" and
///                 "proof_signatures" (hex) override the real signatures.
///   scheduler     {"kind": "fifo" | "random" | "adversarial", "seed", "phases": [[ids]]}
///   max_events    u64
///   k_bound       optional bound for the k-Spending verdict
///
/// With "synthesized-multispend" the faulty set, genesis, scripts and
/// scheduler come from the attack synthesizer, so "faulty", "genesis",
/// "transactions", "honest" and "scheduler" must be absent.
sim::Scenario scenario_from_json(const Json& j, const std::filesystem::path& base_dir = {});
sim::Scenario load_scenario(const std::filesystem::path& path);

/// Lossless: report_from_json(report_to_json(r)) == r.
Json report_to_json(const sim::RunReport& r);
sim::RunReport report_from_json(const Json& j);

/// Debug dump of a replica: echoes, used inputs, pending, history, stored
/// requests and accusations. Secret keys are never written.
Json state_to_json(const protocol::ProcessState& s);

/// Human-readable report with one-based process labels.
std::string report_summary(const sim::RunReport& r);

}  // namespace ksat::io
