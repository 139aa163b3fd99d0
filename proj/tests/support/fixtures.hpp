#pragma once

#include <filesystem>
#include <string>

#include "ksat/trust/trust_model.hpp"

namespace ksat::fixture {

inline std::filesystem::path data(const std::string& relative) {
  return std::filesystem::path(KSAT_DATA_DIR) / relative;
}

/// Four processes, only p3 may fail. p1 trusts {p1,p2,p3}; p2 trusts {p1,p2}
/// or {p2,p4}; p4 trusts {p2,p4} or {p3,p4}. Inconsistency number 2.
inline trust::TrustModel split_trust() {
  return trust::TrustModel(4,
                           {{{0, 1, 2}},
                            {{0, 1}, {1, 3}},
                            {{0, 1, 2, 3}},
                            {{1, 3}, {2, 3}}},
                           {{2}});
}

/// Every process trusts everyone; p4 may fail. Inconsistency number 1.
inline trust::TrustModel all_trust_one_fault() {
  return trust::TrustModel(4, std::vector<std::vector<trust::Quorum>>(4, {ProcessSet::all(4)}), {{3}});
}

}  // namespace ksat::fixture
