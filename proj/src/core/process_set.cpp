#include "ksat/core/process_set.hpp"

namespace ksat {

std::strong_ordering ProcessSet::operator<=>(const ProcessSet& other) const {
  std::uint64_t a = bits_;
  std::uint64_t b = other.bits_;
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib ? std::strong_ordering::less : std::strong_ordering::greater;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == 0 && b == 0) return std::strong_ordering::equal;
  return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<ProcessId> ProcessSet::to_vector() const {
  std::vector<ProcessId> out;
  out.reserve(size());
  for_each([&](ProcessId id) { out.push_back(id); });
  return out;
}

std::string ProcessSet::label() const {
  std::string s = "{";
  bool first = true;
  for_each([&](ProcessId id) {
    if (!first) s += ",";
    s += process_label(id);
    first = false;
  });
  return s + "}";
}

std::string process_label(ProcessId id) { return "p" + std::to_string(id + 1); }

}  // namespace ksat
