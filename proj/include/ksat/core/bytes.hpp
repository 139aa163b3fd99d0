#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ksat {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView bytes);
/// Throws SchemaError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

template <std::size_t N>
std::array<std::uint8_t, N> array_from_hex(std::string_view hex);

inline Bytes bytes_of(std::string_view s) { return Bytes(s.begin(), s.end()); }

/// Big-endian fixed-width writer used for canonical encodings.
class ByteWriter {
public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
  void u64(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
  void raw(ByteView b) { out_.insert(out_.end(), b.begin(), b.end()); }

  /// u32 length prefix followed by the bytes.
  void field(ByteView b) {
    u32(static_cast<std::uint32_t>(b.size()));
    raw(b);
  }

  const Bytes& bytes() const& { return out_; }
  Bytes take() && { return std::move(out_); }

private:
  Bytes out_;
};

}  // namespace ksat

#include "ksat/core/errors.hpp"

namespace ksat {

template <std::size_t N>
std::array<std::uint8_t, N> array_from_hex(std::string_view hex) {
  const Bytes b = from_hex(hex);
  if (b.size() != N) throw SchemaError("expected " + std::to_string(N) + " hex-encoded bytes");
  std::array<std::uint8_t, N> out{};
  std::copy(b.begin(), b.end(), out.begin());
  return out;
}

}  // namespace ksat
