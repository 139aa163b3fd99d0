#include "ksat/ledger/transaction.hpp"

#include <algorithm>

namespace ksat::ledger {

Bytes encode(const TxBody& body) {
  ByteWriter out;

  ByteWriter issuer;
  if (body.issuer) {
    issuer.u8(1);
    issuer.u32(*body.issuer);
  } else {
    issuer.u8(0);
  }
  out.field(issuer.bytes());

  ByteWriter outputs;
  std::uint32_t nonzero = 0;
  for (const auto& [p, amount] : body.outputs) nonzero += amount > 0 ? 1 : 0;
  outputs.u32(nonzero);
  for (const auto& [p, amount] : body.outputs) {
    if (amount == 0) continue;
    outputs.u32(p);
    outputs.u64(amount);
  }
  out.field(outputs.bytes());

  ByteWriter inputs;
  inputs.u32(static_cast<std::uint32_t>(body.inputs.size()));
  for (const auto& ref : body.inputs) inputs.raw(ref.bytes);
  out.field(inputs.bytes());

  ByteWriter ts;
  if (body.timestamp) {
    ts.u8(1);
    ts.u64(*body.timestamp);
  } else {
    ts.u8(0);
  }
  out.field(ts.bytes());

  ByteWriter msg;
  if (body.message) {
    msg.u8(1);
    msg.raw(*body.message);
  } else {
    msg.u8(0);
  }
  out.field(msg.bytes());

  return std::move(out).take();
}

Transaction::Transaction(TxBody body) {
  std::erase_if(body.outputs, [](const auto& kv) { return kv.second == 0; });
  auto data = std::make_shared<Data>();
  data->encoding = encode(body);
  data->id = crypto::content_hash(data->encoding);
  data->body = std::move(body);
  data_ = std::move(data);
}

Transaction Transaction::genesis(std::map<ProcessId, Amount> outputs) {
  TxBody b;
  b.outputs = std::move(outputs);
  return Transaction(std::move(b));
}

Amount Transaction::pays(ProcessId p) const {
  const auto it = outputs().find(p);
  return it == outputs().end() ? 0 : it->second;
}

std::optional<Amount> Transaction::out_value() const {
  Amount total = 0;
  for (const auto& [p, amount] : outputs()) {
    if (total + amount < total) return std::nullopt;
    total += amount;
  }
  return total;
}

bool conflicts(const Transaction& a, const Transaction& b) {
  if (a.is_genesis() || b.is_genesis() || a == b) return false;
  if (a.issuer() != b.issuer()) return false;
  const auto& ia = a.inputs();
  const auto& ib = b.inputs();
  auto x = ia.begin();
  auto y = ib.begin();
  while (x != ia.end() && y != ib.end()) {
    if (*x == *y) return true;
    if (*x < *y) ++x; else ++y;
  }
  return false;
}

}  // namespace ksat::ledger
