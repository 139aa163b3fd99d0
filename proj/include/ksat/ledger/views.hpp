#pragma once

#include <cstddef>
#include <vector>

#include "ksat/ledger/history.hpp"

namespace ksat::ledger {

/// gamma: the largest number of distinct transactions by one issuer spending
/// the same input, counted over the union of the collection. 0 when nothing
/// is spent. Throws MalformedHistory if a member is not well-formed.
std::size_t spending_number(const HistoryCollection& g);

/// Histories i and j can share a cluster: for every issuer, one projection
/// contains the other.
bool compatible(const History& a, const History& b);

inline constexpr std::size_t kDefaultCoverCap = 12;

struct Cover {
  std::size_t number = 0;
  /// Indices into the collection, one vector per cluster.
  std::vector<std::vector<std::size_t>> clusters;
};

/// Minimum number of clusters whose union is the whole collection. Clusters
/// may overlap in principle, but since any subset of a cluster is a cluster
/// a minimum cover can always be taken disjoint; the returned clusters are.
/// Exhaustive over subsets (memoized cluster test per subset), so |g| is
/// capped; throws SizeLimitExceeded above `cap` and MalformedHistory for
/// members that are not well-formed.
Cover cover_number(const HistoryCollection& g, std::size_t cap = kDefaultCoverCap);

}  // namespace ksat::ledger
