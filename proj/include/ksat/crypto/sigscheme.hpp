#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ksat/core/bytes.hpp"
#include "ksat/core/process_set.hpp"

namespace ksat::crypto {

/// Ed25519 is the default. The HMAC mode keys a MAC per process; its
/// "public key" is the MAC key, so it only models unforgeability against
/// adversaries that never read another process's key (the simulator's
/// scripted adversary). Use it for speed in large fuzz batches.
enum class Scheme : std::uint8_t { ed25519 = 1, hmac_sha512 = 2 };

std::string_view scheme_name(Scheme s);
/// Throws SchemaError for unknown names.
Scheme scheme_from_name(std::string_view name);

inline constexpr std::size_t kSignatureSize = 64;
inline constexpr std::size_t kDigestSize = 32;

using Signature = std::array<std::uint8_t, kSignatureSize>;

/// 256-bit content digest.
struct Digest {
  std::array<std::uint8_t, kDigestSize> bytes{};
  auto operator<=>(const Digest&) const = default;
  std::string hex() const { return to_hex(bytes); }
  /// First 8 hex digits, for logs.
  std::string short_hex() const { return hex().substr(0, 8); }
};

struct PublicKey {
  Scheme scheme = Scheme::ed25519;
  Bytes bytes;
  bool operator==(const PublicKey&) const = default;
};

class KeyPair {
public:
  /// Deterministic: the same (scheme, seed, process) always yields the same key.
  static KeyPair derive(Scheme scheme, std::uint64_t seed, ProcessId process);

  Scheme scheme() const { return scheme_; }
  const PublicKey& public_key() const { return public_; }

private:
  friend Signature sign(const KeyPair& keys, ByteView message);
  Scheme scheme_ = Scheme::ed25519;
  PublicKey public_;
  Bytes secret_;
};

Signature sign(const KeyPair& keys, ByteView message);
bool verify(const PublicKey& key, ByteView message, const Signature& sig);

/// SHA-256.
Digest content_hash(ByteView message);

}  // namespace ksat::crypto
