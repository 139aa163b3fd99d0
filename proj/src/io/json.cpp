#include "ksat/io/json.hpp"

#include <fstream>
#include <sstream>

#include "ksat/core/errors.hpp"
#include "ksat/sim/attack.hpp"

namespace ksat::io {

namespace {

using ledger::Transaction;
using ledger::TxRef;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw SchemaError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

ProcessId as_pid(const Json& j, std::size_t n) {
  const auto v = as_u64(j, "process id");
  if (v >= n) throw SchemaError("process id " + std::to_string(v) + " out of range for n = " + std::to_string(n));
  return static_cast<ProcessId>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  return j;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

ProcessSet pset_from_json(const Json& j, std::size_t n) {
  ProcessSet s;
  for (const auto& id : as_array(j, "process list")) s.insert(as_pid(id, n));
  return s;
}

Json pset_to_json(ProcessSet s) { return Json(s.to_vector()); }

template <std::size_t N>
std::array<std::uint8_t, N> hex_array(const Json& j, const char* what) {
  return array_from_hex<N>(as_string(j, what));
}

crypto::Digest digest_from_json(const Json& j) { return crypto::Digest{hex_array<crypto::kDigestSize>(j, "digest")}; }

std::map<ProcessId, ledger::Amount> outputs_from_json(const Json& j, std::size_t n) {
  std::map<ProcessId, ledger::Amount> out;
  for (const auto& pair : as_array(j, "outputs")) {
    if (!pair.is_array() || pair.size() != 2) throw SchemaError("outputs entries must be [id, amount] pairs");
    const ProcessId p = as_pid(pair[0], n);
    if (out.contains(p)) throw SchemaError("outputs name " + process_label(p) + " twice");
    out[p] = as_u64(pair[1], "amount");
  }
  return out;
}

Json outputs_to_json(const std::map<ProcessId, ledger::Amount>& outputs) {
  Json out = Json::array();
  for (const auto& [p, a] : outputs) out.push_back({p, a});
  return out;
}

Json signed_to_json(const ledger::SignedTx& s) {
  return Json{{"tx", tx_to_json(s.tx)}, {"signature", to_hex(s.signature)}};
}

ledger::SignedTx signed_from_json(const Json& j) {
  return {tx_from_json(field(j, "tx")), hex_array<crypto::kSignatureSize>(field(j, "signature"), "signature")};
}

Json accusation_to_json(const ledger::Accusation& a) {
  Json proof = Json::array();
  for (const auto& s : a.proof()) proof.push_back(signed_to_json(s));
  return Json{{"accused", pset_to_json(a.accused())}, {"proof", proof}};
}

ledger::Accusation accusation_from_json(const Json& j) {
  std::vector<ledger::SignedTx> proof;
  for (const auto& s : as_array(field(j, "proof"), "proof")) proof.push_back(signed_from_json(s));
  return ledger::Accusation(pset_from_json(field(j, "accused"), kMaxProcesses), std::move(proof));
}

template <typename T, typename F>
T parse_guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed JSON value: ") + e.what());
  }
}

// ---- scenarios ----

class ScenarioReader {
public:
  ScenarioReader(const Json& j, std::filesystem::path base) : j_(j), base_(std::move(base)) {}

  sim::Scenario read() {
    trust::TrustModel model = read_model();
    n_ = model.size();
    sim::KeySpec keys;
    if (j_.contains("keys")) {
      const auto& k = j_["keys"];
      if (k.contains("scheme")) keys.scheme = crypto::scheme_from_name(as_string(k["scheme"], "keys.scheme"));
      if (k.contains("seed")) keys.seed = as_u64(k["seed"], "keys.seed");
    }

    const bool synthesized = j_.contains("byzantine") && j_["byzantine"].is_string();
    std::optional<sim::Scenario> built;
    if (synthesized) {
      if (as_string(j_["byzantine"], "byzantine") != "synthesized-multispend") {
        throw SchemaError("unknown byzantine tag \"" + j_["byzantine"].get<std::string>() + "\"");
      }
      for (const char* key : {"faulty", "genesis", "transactions", "honest", "scheduler"}) {
        if (j_.contains(key)) throw SchemaError(std::string("\"") + key + "\" conflicts with a synthesized attack");
      }
      sim::AttackOptions opts;
      opts.keys = keys;
      built.emplace(sim::synthesize_multispend_attack(model, opts).scenario);
    } else {
      built.emplace(read_explicit(std::move(model), keys));
    }

    sim::Scenario& sc = *built;
    if (j_.contains("name")) sc.name = as_string(j_["name"], "name");
    if (j_.contains("max_events")) sc.max_events = as_u64(j_["max_events"], "max_events");
    if (j_.contains("k_bound")) sc.k_bound = as_u64(j_["k_bound"], "k_bound");
    sim::validate(sc);
    return std::move(sc);
  }

private:
  trust::TrustModel read_model() {
    if (j_.contains("model") == j_.contains("model_file")) {
      throw SchemaError("scenario needs exactly one of \"model\" and \"model_file\"");
    }
    if (j_.contains("model")) return model_from_json(j_["model"]);
    return load_model(base_ / as_string(j_["model_file"], "model_file"));
  }

  sim::Scenario read_explicit(trust::TrustModel model, const sim::KeySpec& keys) {
    const auto genesis = Transaction::genesis(j_.contains("genesis") ? outputs_from_json(j_["genesis"], n_)
                                                                      : std::map<ProcessId, ledger::Amount>{});
    sim::Scenario sc(std::move(model), genesis);
    sc.keys = keys;
    if (j_.contains("faulty")) sc.faulty = pset_from_json(j_["faulty"], n_);
    labels_.emplace("genesis", genesis);

    if (j_.contains("transactions")) {
      for (const auto& t : as_array(j_["transactions"], "transactions")) read_tx(t);
    }
    if (j_.contains("honest")) {
      for (const auto& l : as_array(j_["honest"], "honest")) sc.honest.push_back({lookup(l)});
    }
    if (j_.contains("byzantine")) {
      const sim::ByzantineSigner signer(keys, sc.faulty);
      for (const auto& s : as_array(j_["byzantine"], "byzantine")) {
        const ProcessId from = as_pid(field(s, "from"), n_);
        sc.byzantine[from].sends.push_back(read_send(s, from, signer));
      }
    }
    if (j_.contains("scheduler")) sc.scheduler = read_scheduler(j_["scheduler"]);
    return sc;
  }

  void read_tx(const Json& t) {
    const std::string label = as_string(field(t, "label"), "label");
    if (labels_.contains(label)) throw SchemaError("duplicate transaction label \"" + label + "\"");
    ledger::TxBody body;
    body.issuer = as_pid(field(t, "issuer"), n_);
    body.outputs = outputs_from_json(field(t, "outputs"), n_);
    for (const auto& in : as_array(field(t, "inputs"), "inputs")) {
      const std::string name = as_string(in, "input");
      const auto it = labels_.find(name);
      body.inputs.insert(it != labels_.end() ? it->second.id() : digest_from_json(in));
    }
    if (t.contains("message")) body.message = bytes_of(as_string(t["message"], "message"));
    if (t.contains("timestamp")) body.timestamp = as_u64(t["timestamp"], "timestamp");
    labels_.emplace(label, Transaction(std::move(body)));
  }

  const Transaction& lookup(const Json& l) const {
    const std::string name = as_string(l, "transaction label");
    const auto it = labels_.find(name);
    if (it == labels_.end()) throw SchemaError("unknown transaction label \"" + name + "\"");
    return it->second;
  }

  static void override_signature(const Json& s, const char* key, crypto::Signature& sig) {
    if (s.contains(key)) sig = hex_array<crypto::kSignatureSize>(s[key], key);
  }

  sim::ScriptedSend read_send(const Json& s, ProcessId from, const sim::ByzantineSigner& signer) const {
    const ProcessSet to = pset_from_json(field(s, "to"), n_);
    const std::string type = as_string(field(s, "type"), "type");
    if (type == "req" || type == "echo") {
      const Transaction& tx = lookup(field(s, "tx"));
      if (tx.is_genesis()) throw SchemaError("the genesis transaction cannot be requested");
      protocol::Message m = type == "req" ? signer.req(tx) : signer.echo(from, tx);
      if (type == "req" && m.sender != from) throw SchemaError("a REQ must come from the transaction's issuer");
      std::visit(
          [&](auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, protocol::Req>) override_signature(s, "signature", p.request.signature);
            if constexpr (std::is_same_v<P, protocol::Echo>) {
              override_signature(s, "signature", p.request.signature);
              override_signature(s, "echo_signature", p.echo_signature);
            }
          },
          m.payload);
      return {to, std::move(m)};
    }
    if (type == "acc") {
      std::vector<ledger::SignedTx> proof;
      const auto& labels = as_array(field(s, "proof"), "proof");
      const Json overrides = s.contains("proof_signatures") ? s["proof_signatures"] : Json::array();
      if (!overrides.empty() && overrides.size() != labels.size()) {
        throw SchemaError("proof_signatures must match the proof length");
      }
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const Transaction& tx = lookup(labels[i]);
        if (tx.is_genesis()) throw SchemaError("the genesis transaction cannot appear in a proof");
        crypto::Signature sig{};
        if (overrides.empty()) {
          sig = signer.sign(tx.issuer(), tx);
        } else {
          sig = hex_array<crypto::kSignatureSize>(overrides[i], "proof signature");
        }
        proof.push_back({tx, sig});
      }
      return {to, signer.acc(from, ledger::Accusation(pset_from_json(field(s, "accused"), n_), std::move(proof)))};
    }
    throw SchemaError("unknown send type \"" + type + "\"");
  }

  sim::SchedulerSpec read_scheduler(const Json& s) const {
    sim::SchedulerSpec spec;
    const std::string kind = s.contains("kind") ? as_string(s["kind"], "scheduler.kind") : "fifo";
    if (kind == "fifo") {
      spec.kind = sim::SchedulerKind::fifo;
    } else if (kind == "random") {
      spec.kind = sim::SchedulerKind::random;
    } else if (kind == "adversarial") {
      spec.kind = sim::SchedulerKind::adversarial;
    } else {
      throw SchemaError("unknown scheduler kind \"" + kind + "\"");
    }
    if (s.contains("seed")) spec.seed = as_u64(s["seed"], "scheduler.seed");
    if (s.contains("phases")) {
      for (const auto& p : as_array(s["phases"], "phases")) spec.phases.push_back(pset_from_json(p, n_));
    }
    return spec;
  }

  const Json& j_;
  std::filesystem::path base_;
  std::size_t n_ = 0;
  std::map<std::string, Transaction> labels_;
};

// ---- reports ----

std::string status_name(sim::RunStatus s) { return s == sim::RunStatus::quiescent ? "quiescent" : "nontermination"; }

sim::RunStatus status_from_name(const std::string& s) {
  if (s == "quiescent") return sim::RunStatus::quiescent;
  if (s == "nontermination") return sim::RunStatus::nontermination;
  throw SchemaError("unknown run status \"" + s + "\"");
}

const char* trace_kind_name(sim::TraceKind k) {
  switch (k) {
    case sim::TraceKind::inject:
      return "inject";
    case sim::TraceKind::issue:
      return "issue";
    case sim::TraceKind::deliver:
      return "deliver";
    case sim::TraceKind::accept:
      return "accept";
    case sim::TraceKind::accuse:
      return "accuse";
  }
  return "?";
}

sim::TraceKind trace_kind_from_name(const std::string& s) {
  for (auto k : {sim::TraceKind::inject, sim::TraceKind::issue, sim::TraceKind::deliver, sim::TraceKind::accept,
                 sim::TraceKind::accuse}) {
    if (s == trace_kind_name(k)) return k;
  }
  throw SchemaError("unknown trace kind \"" + s + "\"");
}

sim::Property property_from_name(const std::string& s) {
  for (auto p : sim::kAllProperties) {
    if (s == sim::property_name(p)) return p;
  }
  throw SchemaError("unknown property \"" + s + "\"");
}

sim::VerdictStatus verdict_from_name(const std::string& s) {
  for (auto v : {sim::VerdictStatus::holds, sim::VerdictStatus::violated, sim::VerdictStatus::vacuous,
                 sim::VerdictStatus::inconclusive}) {
    if (s == sim::verdict_name(v)) return v;
  }
  throw SchemaError("unknown verdict \"" + s + "\"");
}

Json optional_to_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::size_t> optional_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return static_cast<std::size_t>(as_u64(j, "optional count"));
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

Json model_to_json(const trust::TrustModel& model) {
  Json quorums = Json::array();
  for (const auto& system : model.quorum_systems()) {
    Json qs = Json::array();
    for (const auto& q : system) qs.push_back(pset_to_json(q));
    quorums.push_back(qs);
  }
  Json faults = Json::array();
  for (const auto& f : model.fault_model()) faults.push_back(pset_to_json(f));
  return Json{{"n", model.size()}, {"quorums", quorums}, {"fault_model_maximal", faults}};
}

trust::TrustModel model_from_json(const Json& j) {
  return parse_guarded<trust::TrustModel>([&] {
    const auto n64 = as_u64(field(j, "n"), "n");
    if (n64 == 0 || n64 > kMaxProcesses) {
      throw SchemaError("n must be between 1 and " + std::to_string(kMaxProcesses));
    }
    const auto n = static_cast<std::size_t>(n64);
    std::vector<std::vector<trust::Quorum>> quorums;
    for (const auto& system : as_array(field(j, "quorums"), "quorums")) {
      auto& qs = quorums.emplace_back();
      for (const auto& q : as_array(system, "quorum system")) qs.push_back(pset_from_json(q, n));
    }
    std::vector<ProcessSet> faults;
    for (const auto& f : as_array(field(j, "fault_model_maximal"), "fault_model_maximal")) {
      faults.push_back(pset_from_json(f, n));
    }
    return trust::TrustModel(n, std::move(quorums), std::move(faults));
  });
}

trust::TrustModel load_model(const std::filesystem::path& path) { return model_from_json(read_json_file(path)); }

Json tx_to_json(const Transaction& tx) {
  Json j{{"id", tx.id().hex()}};
  j["issuer"] = tx.is_genesis() ? Json(nullptr) : Json(tx.issuer());
  j["outputs"] = outputs_to_json(tx.outputs());
  Json inputs = Json::array();
  for (const auto& in : tx.inputs()) inputs.push_back(in.hex());
  j["inputs"] = inputs;
  if (tx.body().timestamp) j["timestamp"] = *tx.body().timestamp;
  if (tx.body().message) j["message"] = to_hex(*tx.body().message);
  return j;
}

Transaction tx_from_json(const Json& j) {
  return parse_guarded<Transaction>([&] {
    ledger::TxBody body;
    if (!field(j, "issuer").is_null()) body.issuer = as_pid(j["issuer"], kMaxProcesses);
    body.outputs = outputs_from_json(field(j, "outputs"), kMaxProcesses);
    for (const auto& in : as_array(field(j, "inputs"), "inputs")) body.inputs.insert(digest_from_json(in));
    if (j.contains("timestamp")) body.timestamp = as_u64(j["timestamp"], "timestamp");
    if (j.contains("message")) body.message = from_hex(as_string(j["message"], "message"));
    Transaction tx(std::move(body));
    if (j.contains("id") && as_string(j["id"], "id") != tx.id().hex()) {
      throw SchemaError("transaction id does not match its content");
    }
    return tx;
  });
}

Json witness_to_json(const trust::InconsistencyWitness& w) {
  Json s = Json::array();
  for (const auto& q : w.quorum_map.choice) s.push_back(pset_to_json(q));
  return Json{{"faulty", pset_to_json(w.faulty)}, {"quorum_map", s}, {"independent", pset_to_json(w.independent)}};
}

sim::Scenario scenario_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return parse_guarded<sim::Scenario>([&] { return ScenarioReader(j, base_dir).read(); });
}

sim::Scenario load_scenario(const std::filesystem::path& path) {
  sim::Scenario sc = scenario_from_json(read_json_file(path), path.parent_path());
  if (sc.name.empty()) sc.name = path.stem().string();
  return sc;
}

Json report_to_json(const sim::RunReport& r) {
  Json j;
  j["scenario"] = r.scenario;
  j["status"] = status_name(r.status);
  j["events"] = r.events;
  j["n"] = r.n;
  j["faulty"] = pset_to_json(r.faulty);
  j["live"] = pset_to_json(r.live);
  j["k_bound"] = optional_to_json(r.k_bound);
  j["gamma"] = r.gamma;
  j["cover_number"] = optional_to_json(r.cover_number);
  j["clusters"] = r.clusters;

  Json verdicts = Json::object();
  for (const auto& [p, v] : r.verdicts) {
    Json e{{"status", sim::verdict_name(v.status)}, {"detail", v.detail}};
    e["trace_index"] = optional_to_json(v.trace_index);
    verdicts[std::string(sim::property_name(p))] = e;
  }
  j["verdicts"] = verdicts;

  j["genesis"] = tx_to_json(r.genesis);
  Json keys = Json::array();
  for (const auto& k : r.public_keys) keys.push_back({{"scheme", crypto::scheme_name(k.scheme)}, {"key", to_hex(k.bytes)}});
  j["public_keys"] = keys;

  Json correct = Json::array();
  for (const auto& o : r.correct) {
    Json history = Json::array();
    for (const auto& tx : o.history) history.push_back(tx_to_json(tx));
    Json order = Json::array();
    for (const auto& ref : o.accepted_order) order.push_back(ref.hex());
    Json accs = Json::array();
    for (const auto& a : o.accusations) accs.push_back(accusation_to_json(a));
    correct.push_back(
        {{"id", o.id}, {"live", o.live}, {"history", history}, {"accepted_order", order}, {"accusations", accs}});
  }
  j["correct"] = correct;

  Json issued = Json::array();
  for (const auto& i : r.issued) issued.push_back({{"step", i.step}, {"tx", tx_to_json(i.tx)}});
  j["issued"] = issued;

  Json timeline = Json::array();
  for (const auto& g : r.gamma_timeline) timeline.push_back({g.step, g.gamma});
  j["gamma_timeline"] = timeline;
  j["correct_sends"] = r.correct_sends;
  j["correct_deliveries"] = r.correct_deliveries;

  Json trace = Json::array();
  for (const auto& e : r.trace) {
    trace.push_back({e.step, trace_kind_name(e.kind), e.process, e.peer, e.subject.hex()});
  }
  j["trace_hash"] = r.trace_hash;
  j["trace"] = trace;
  return j;
}

sim::RunReport report_from_json(const Json& j) {
  return parse_guarded<sim::RunReport>([&] {
    sim::RunReport r;
    r.scenario = as_string(field(j, "scenario"), "scenario");
    r.status = status_from_name(as_string(field(j, "status"), "status"));
    r.events = as_u64(field(j, "events"), "events");
    r.n = as_u64(field(j, "n"), "n");
    r.faulty = pset_from_json(field(j, "faulty"), kMaxProcesses);
    r.live = pset_from_json(field(j, "live"), kMaxProcesses);
    r.k_bound = optional_from_json(field(j, "k_bound"));
    r.gamma = as_u64(field(j, "gamma"), "gamma");
    r.cover_number = optional_from_json(field(j, "cover_number"));
    r.clusters = field(j, "clusters").get<std::vector<std::vector<ProcessId>>>();

    for (const auto& [name, v] : field(j, "verdicts").items()) {
      r.verdicts[property_from_name(name)] =
          sim::Verdict{verdict_from_name(as_string(field(v, "status"), "status")),
                       as_string(field(v, "detail"), "detail"), optional_from_json(field(v, "trace_index"))};
    }

    r.genesis = tx_from_json(field(j, "genesis"));
    for (const auto& k : as_array(field(j, "public_keys"), "public_keys")) {
      r.public_keys.push_back(crypto::PublicKey{crypto::scheme_from_name(as_string(field(k, "scheme"), "scheme")),
                                                from_hex(as_string(field(k, "key"), "key"))});
    }

    for (const auto& o : as_array(field(j, "correct"), "correct")) {
      sim::ProcessOutcome out;
      out.id = as_pid(field(o, "id"), kMaxProcesses);
      out.live = field(o, "live").get<bool>();
      for (const auto& tx : as_array(field(o, "history"), "history")) out.history.push_back(tx_from_json(tx));
      for (const auto& ref : as_array(field(o, "accepted_order"), "accepted_order")) {
        out.accepted_order.push_back(digest_from_json(ref));
      }
      for (const auto& a : as_array(field(o, "accusations"), "accusations")) {
        out.accusations.push_back(accusation_from_json(a));
      }
      r.correct.push_back(std::move(out));
    }

    for (const auto& i : as_array(field(j, "issued"), "issued")) {
      r.issued.push_back({as_u64(field(i, "step"), "step"), tx_from_json(field(i, "tx"))});
    }
    for (const auto& g : as_array(field(j, "gamma_timeline"), "gamma_timeline")) {
      r.gamma_timeline.push_back({as_u64(g.at(0), "step"), static_cast<std::size_t>(as_u64(g.at(1), "gamma"))});
    }
    r.correct_sends = as_u64(field(j, "correct_sends"), "correct_sends");
    r.correct_deliveries = as_u64(field(j, "correct_deliveries"), "correct_deliveries");

    r.trace_hash = as_string(field(j, "trace_hash"), "trace_hash");
    for (const auto& e : as_array(field(j, "trace"), "trace")) {
      if (!e.is_array() || e.size() != 5) throw SchemaError("trace entries have five fields");
      r.trace.push_back(sim::TraceEvent{as_u64(e[0], "step"), trace_kind_from_name(as_string(e[1], "kind")),
                                        as_pid(e[2], kMaxProcesses), as_pid(e[3], kMaxProcesses),
                                        digest_from_json(e[4])});
    }
    return r;
  });
}

Json state_to_json(const protocol::ProcessState& s) {
  auto refs = [](const std::set<TxRef>& set) {
    Json out = Json::array();
    for (const auto& r : set) out.push_back(r.hex());
    return out;
  };
  Json echoes = Json::object();
  for (const auto& [p, txs] : s.echoes) echoes[std::to_string(p)] = refs(txs);
  Json used = Json::object();
  for (const auto& [p, txs] : s.used_inputs) used[std::to_string(p)] = refs(txs);
  Json pending = Json::array();
  for (const auto& [_, tx] : s.pending) pending.push_back(tx_to_json(tx));
  Json history = Json::array();
  for (const auto& [_, tx] : s.history) history.push_back(tx_to_json(tx));
  Json requests = Json::object();
  for (const auto& [p, set] : s.signed_requests) {
    Json list = Json::array();
    for (const auto& r : set) list.push_back(signed_to_json(r));
    requests[std::to_string(p)] = list;
  }
  Json accusations = Json::array();
  for (const auto& a : s.accusation_log) accusations.push_back(accusation_to_json(a));
  Json quorums = Json::array();
  for (const auto& q : s.quorums) quorums.push_back(pset_to_json(q));
  return Json{{"self", s.self},
              {"n", s.n},
              {"public_key", to_hex(s.keys.public_key().bytes)},
              {"quorums", quorums},
              {"echoes", echoes},
              {"used_inputs", used},
              {"pending", pending},
              {"history", history},
              {"signed_requests", requests},
              {"accusations", accusations}};
}

std::string report_summary(const sim::RunReport& r) {
  std::ostringstream out;
  out << "scenario      " << r.scenario << "\n";
  out << "status        " << status_name(r.status) << " after " << r.events << " events\n";
  out << "faulty        " << r.faulty.label() << "\n";
  out << "live correct  " << r.live.label() << "\n";
  out << "gamma         " << r.gamma;
  if (r.k_bound) out << " (k = " << *r.k_bound << ")";
  out << "\n";
  out << "cover number  ";
  if (r.cover_number) {
    out << *r.cover_number << " :";
    for (const auto& c : r.clusters) {
      out << " " << ProcessSet::from_vector(c).label();
    }
  } else {
    out << "not computed";
  }
  out << "\n\n";
  for (const auto& o : r.correct) {
    out << process_label(o.id) << (o.live ? "  live   " : "  unlive ") << o.history.size() - 1 << " accepted, "
        << o.accusations.size() << " accusations\n";
  }
  out << "\n";
  for (const auto& [p, v] : r.verdicts) {
    std::string name(sim::property_name(p));
    name.resize(20, ' ');
    out << name << sim::verdict_name(v.status);
    if (!v.detail.empty()) out << "  " << v.detail;
    if (v.trace_index) out << "  [trace #" << *v.trace_index << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace ksat::io
