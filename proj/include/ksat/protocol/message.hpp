#pragma once

#include <string_view>
#include <variant>

#include "ksat/ledger/accusation.hpp"
#include "ksat/ledger/transaction.hpp"

namespace ksat::protocol {

/// [REQ, tx, sigma_issuer]
struct Req {
  ledger::SignedTx request;
  bool operator==(const Req&) const = default;
};

/// [ECHO, (tx, sigma_issuer), sigma_echoer]
struct Echo {
  ledger::SignedTx request;
  crypto::Signature echo_signature{};
  bool operator==(const Echo&) const = default;
};

/// [ACC, accusation]
struct Acc {
  ledger::Accusation accusation;
  bool operator==(const Acc&) const = default;
};

enum class MessageKind : std::uint8_t { req = 1, echo = 2, acc = 3 };

std::string_view kind_name(MessageKind k);

struct Message {
  ProcessId sender = 0;
  ProcessSet recipients;
  std::variant<Req, Echo, Acc> payload;

  MessageKind kind() const { return static_cast<MessageKind>(payload.index() + 1); }
  bool operator==(const Message&) const = default;
};

/// Canonical bytes of the message (sender, kind, payload; recipients are
/// excluded because they describe routing, not content).
Bytes encode(const Message& m);
crypto::Digest digest(const Message& m);

}  // namespace ksat::protocol
