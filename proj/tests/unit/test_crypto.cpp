#include <gtest/gtest.h>

#include "ksat/core/errors.hpp"
#include "ksat/crypto/sigscheme.hpp"

namespace ksat::crypto {
namespace {

class Schemes : public ::testing::TestWithParam<Scheme> {};

TEST_P(Schemes, SignThenVerify) {
  const auto k = KeyPair::derive(GetParam(), 1, 0);
  const Bytes msg = bytes_of("transfer");
  EXPECT_TRUE(verify(k.public_key(), msg, sign(k, msg)));
}

TEST_P(Schemes, FlippedBitFails) {
  const auto k = KeyPair::derive(GetParam(), 1, 0);
  Bytes msg = bytes_of("transfer");
  const auto sig = sign(k, msg);
  for (std::size_t bit = 0; bit < msg.size() * 8; ++bit) {
    Bytes flipped = msg;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    ASSERT_FALSE(verify(k.public_key(), flipped, sig));
  }
  auto bad = sig;
  bad[10] ^= 1;
  EXPECT_FALSE(verify(k.public_key(), msg, bad));
}

TEST_P(Schemes, OtherProcessKeyFails) {
  const Bytes msg = bytes_of("transfer");
  for (ProcessId i = 0; i < 6; ++i) {
    const auto ki = KeyPair::derive(GetParam(), 3, i);
    const auto sig = sign(ki, msg);
    for (ProcessId j = 0; j < 6; ++j) {
      const auto kj = KeyPair::derive(GetParam(), 3, j);
      ASSERT_EQ(verify(kj.public_key(), msg, sig), i == j);
    }
  }
}

TEST_P(Schemes, DerivationIsDeterministic) {
  const auto a = KeyPair::derive(GetParam(), 42, 7);
  const auto b = KeyPair::derive(GetParam(), 42, 7);
  EXPECT_EQ(a.public_key(), b.public_key());
  EXPECT_EQ(sign(a, bytes_of("x")), sign(b, bytes_of("x")));
  EXPECT_NE(a.public_key(), KeyPair::derive(GetParam(), 43, 7).public_key());
}

INSTANTIATE_TEST_SUITE_P(Both, Schemes, ::testing::Values(Scheme::ed25519, Scheme::hmac_sha512));

TEST(Schemes, CrossSchemeKeysDoNotVerify) {
  const auto ed = KeyPair::derive(Scheme::ed25519, 1, 0);
  const auto mac = KeyPair::derive(Scheme::hmac_sha512, 1, 0);
  const Bytes msg = bytes_of("m");
  EXPECT_FALSE(verify(mac.public_key(), msg, sign(ed, msg)));
  EXPECT_FALSE(verify(ed.public_key(), msg, sign(mac, msg)));
}

TEST(Schemes, Names) {
  EXPECT_EQ(scheme_from_name("ed25519"), Scheme::ed25519);
  EXPECT_EQ(scheme_from_name(scheme_name(Scheme::hmac_sha512)), Scheme::hmac_sha512);
  EXPECT_THROW(scheme_from_name("rsa"), SchemaError);
}

TEST(ContentHash, PinnedValues) {
  EXPECT_EQ(content_hash(Bytes{}).hex(), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(content_hash(bytes_of("abc")).hex(), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ContentHash, EqualAndDifferentInputs) {
  EXPECT_EQ(content_hash(bytes_of("a")), content_hash(bytes_of("a")));
  EXPECT_NE(content_hash(bytes_of("a")), content_hash(bytes_of("b")));
}

}  // namespace
}  // namespace ksat::crypto
