#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ksat {

using ProcessId = std::uint32_t;

/// Upper bound on the number of processes a model may declare. Process sets
/// are single 64-bit words, so every set operation is a handful of
/// instructions inside the enumeration kernels.
inline constexpr std::size_t kMaxProcesses = 64;

/// A subset of {0, ..., kMaxProcesses - 1}.
class ProcessSet {
public:
  constexpr ProcessSet() = default;
  constexpr explicit ProcessSet(std::uint64_t bits) : bits_(bits) {}
  ProcessSet(std::initializer_list<ProcessId> ids) {
    for (auto id : ids) insert(id);
  }

  static ProcessSet from_vector(const std::vector<ProcessId>& ids) {
    ProcessSet s;
    for (auto id : ids) s.insert(id);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr ProcessSet all(std::size_t n) {
    return ProcessSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool contains(ProcessId id) const { return id < 64 && ((bits_ >> id) & 1u) != 0; }
  constexpr void insert(ProcessId id) { bits_ |= std::uint64_t{1} << id; }
  constexpr void erase(ProcessId id) { bits_ &= ~(std::uint64_t{1} << id); }

  constexpr bool subset_of(ProcessSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ProcessSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest member. Undefined on the empty set.
  constexpr ProcessId front() const { return static_cast<ProcessId>(std::countr_zero(bits_)); }

  constexpr ProcessSet operator&(ProcessSet o) const { return ProcessSet(bits_ & o.bits_); }
  constexpr ProcessSet operator|(ProcessSet o) const { return ProcessSet(bits_ | o.bits_); }
  constexpr ProcessSet operator-(ProcessSet o) const { return ProcessSet(bits_ & ~o.bits_); }
  constexpr ProcessSet& operator&=(ProcessSet o) { bits_ &= o.bits_; return *this; }
  constexpr ProcessSet& operator|=(ProcessSet o) { bits_ |= o.bits_; return *this; }
  constexpr ProcessSet& operator-=(ProcessSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ProcessSet&) const = default;

  /// Lexicographic order on the ascending member lists, e.g. {0,3} < {1,2}
  /// and {0} < {0,1}. This is the tie-breaking order used across the project.
  std::strong_ordering operator<=>(const ProcessSet& other) const;

  std::vector<ProcessId> to_vector() const;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<ProcessId>(std::countr_zero(b)));
  }

  /// "{p1,p4}" with one-based labels, the notation used in reports.
  std::string label() const;

private:
  std::uint64_t bits_ = 0;
};

/// "p3" for id 2.
std::string process_label(ProcessId id);

}  // namespace ksat
