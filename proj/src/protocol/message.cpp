#include "ksat/protocol/message.hpp"

namespace ksat::protocol {

std::string_view kind_name(MessageKind k) {
  switch (k) {
    case MessageKind::req:
      return "REQ";
    case MessageKind::echo:
      return "ECHO";
    case MessageKind::acc:
      return "ACC";
  }
  return "?";
}

namespace {

void put_signed(ByteWriter& w, const ledger::SignedTx& s) {
  w.field(s.tx.encoding());
  w.raw(s.signature);
}

}  // namespace

Bytes encode(const Message& m) {
  ByteWriter w;
  w.u32(m.sender);
  w.u8(static_cast<std::uint8_t>(m.kind()));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Req>) {
          put_signed(w, p.request);
        } else if constexpr (std::is_same_v<T, Echo>) {
          put_signed(w, p.request);
          w.raw(p.echo_signature);
        } else {
          w.u64(p.accusation.accused().bits());
          w.u32(static_cast<std::uint32_t>(p.accusation.proof().size()));
          for (const auto& e : p.accusation.proof()) put_signed(w, e);
        }
      },
      m.payload);
  return std::move(w).take();
}

crypto::Digest digest(const Message& m) { return crypto::content_hash(encode(m)); }

}  // namespace ksat::protocol
