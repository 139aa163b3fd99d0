#include "ksat/crypto/sigscheme.hpp"

#include <sodium.h>

#include "ksat/core/errors.hpp"

namespace ksat::crypto {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw Error("libsodium failed to initialize");
}

std::array<std::uint8_t, 32> derive_seed(Scheme scheme, std::uint64_t seed, ProcessId process) {
  ByteWriter w;
  w.raw(bytes_of("ksat-key-derivation"));
  w.u8(static_cast<std::uint8_t>(scheme));
  w.u64(seed);
  w.u32(process);
  return content_hash(w.bytes()).bytes;
}

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ed25519:
      return "ed25519";
    case Scheme::hmac_sha512:
      return "hmac-sha512";
  }
  return "unknown";
}

Scheme scheme_from_name(std::string_view name) {
  if (name == "ed25519") return Scheme::ed25519;
  if (name == "hmac-sha512") return Scheme::hmac_sha512;
  throw SchemaError("unknown signature scheme '" + std::string(name) + "'");
}

KeyPair KeyPair::derive(Scheme scheme, std::uint64_t seed, ProcessId process) {
  ensure_sodium();
  const auto material = derive_seed(scheme, seed, process);
  KeyPair kp;
  kp.scheme_ = scheme;
  kp.public_.scheme = scheme;
  switch (scheme) {
    case Scheme::ed25519: {
      kp.public_.bytes.resize(crypto_sign_PUBLICKEYBYTES);
      kp.secret_.resize(crypto_sign_SECRETKEYBYTES);
      crypto_sign_seed_keypair(kp.public_.bytes.data(), kp.secret_.data(), material.data());
      break;
    }
    case Scheme::hmac_sha512: {
      static_assert(crypto_auth_hmacsha512_KEYBYTES == 32);
      kp.secret_.assign(material.begin(), material.end());
      kp.public_.bytes = kp.secret_;
      break;
    }
  }
  return kp;
}

Signature sign(const KeyPair& keys, ByteView message) {
  ensure_sodium();
  Signature sig{};
  switch (keys.scheme_) {
    case Scheme::ed25519:
      static_assert(crypto_sign_BYTES == kSignatureSize);
      crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), keys.secret_.data());
      break;
    case Scheme::hmac_sha512:
      static_assert(crypto_auth_hmacsha512_BYTES == kSignatureSize);
      crypto_auth_hmacsha512(sig.data(), message.data(), message.size(), keys.secret_.data());
      break;
  }
  return sig;
}

bool verify(const PublicKey& key, ByteView message, const Signature& sig) {
  ensure_sodium();
  switch (key.scheme) {
    case Scheme::ed25519:
      if (key.bytes.size() != crypto_sign_PUBLICKEYBYTES) return false;
      return crypto_sign_verify_detached(sig.data(), message.data(), message.size(), key.bytes.data()) == 0;
    case Scheme::hmac_sha512:
      if (key.bytes.size() != crypto_auth_hmacsha512_KEYBYTES) return false;
      return crypto_auth_hmacsha512_verify(sig.data(), message.data(), message.size(), key.bytes.data()) == 0;
  }
  return false;
}

Digest content_hash(ByteView message) {
  ensure_sodium();
  Digest d;
  crypto_hash_sha256(d.bytes.data(), message.data(), message.size());
  return d;
}

}  // namespace ksat::crypto
