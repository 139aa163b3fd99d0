#include "ksat/ledger/views.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "ksat/core/errors.hpp"

namespace ksat::ledger {

namespace {

void require_well_formed(const HistoryCollection& g) {
  for (const auto& h : g) {
    if (!is_well_formed(h)) throw MalformedHistory("collection contains a history that is not well-formed");
  }
}

std::map<ProcessId, std::set<TxRef>> projections(const History& h) {
  std::map<ProcessId, std::set<TxRef>> out;
  for (const auto& [ref, tx] : h) {
    if (!tx.is_genesis()) out[tx.issuer()].insert(ref);
  }
  return out;
}

bool nested(const std::set<TxRef>& a, const std::set<TxRef>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

bool compatible_projections(const std::map<ProcessId, std::set<TxRef>>& a,
                            const std::map<ProcessId, std::set<TxRef>>& b) {
  static const std::set<TxRef> kEmpty;
  for (const auto& [r, pa] : a) {
    const auto it = b.find(r);
    if (!nested(pa, it == b.end() ? kEmpty : it->second)) return false;
  }
  return true;
}

}  // namespace

std::size_t spending_number(const HistoryCollection& g) {
  require_well_formed(g);
  std::map<std::pair<ProcessId, TxRef>, std::set<TxRef>> spends;
  for (const auto& h : g) {
    for (const auto& [ref, tx] : h) {
      if (tx.is_genesis()) continue;
      for (const auto& in : tx.inputs()) spends[{tx.issuer(), in}].insert(ref);
    }
  }
  std::size_t best = 0;
  for (const auto& [_, txs] : spends) best = std::max(best, txs.size());
  return best;
}

bool compatible(const History& a, const History& b) { return compatible_projections(projections(a), projections(b)); }

Cover cover_number(const HistoryCollection& g, std::size_t cap) {
  // the subset tables below are indexed by 32-bit masks
  cap = std::min<std::size_t>(cap, 24);
  if (g.size() > cap) {
    throw SizeLimitExceeded("cover search is limited to " + std::to_string(cap) + " histories", 0);
  }
  require_well_formed(g);
  const std::size_t m = g.size();
  Cover cover;
  if (m == 0) return cover;

  std::vector<std::map<ProcessId, std::set<TxRef>>> proj;
  proj.reserve(m);
  for (const auto& h : g) proj.push_back(projections(h));
  std::vector<std::uint32_t> compat(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || compatible_projections(proj[i], proj[j])) compat[i] |= 1u << j;
    }
  }

  const std::uint32_t full = (1u << m) - 1;
  // is_cluster[mask]: built from mask without its lowest member
  std::vector<bool> is_cluster(std::size_t{full} + 1, false);
  is_cluster[0] = true;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    is_cluster[mask] = is_cluster[rest] && (rest & ~compat[low]) == 0;
  }

  // best[mask]: fewest clusters partitioning mask; the cluster holding the
  // lowest member is enumerated among submasks that contain it.
  constexpr std::uint8_t kInf = 0xff;
  std::vector<std::uint8_t> best(std::size_t{full} + 1, kInf);
  std::vector<std::uint32_t> pick(std::size_t{full} + 1, 0);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t others = mask ^ low;
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      const std::uint32_t cluster = sub | low;
      if (is_cluster[cluster] && best[mask ^ cluster] != kInf && best[mask ^ cluster] + 1 < best[mask]) {
        best[mask] = static_cast<std::uint8_t>(best[mask ^ cluster] + 1);
        pick[mask] = cluster;
      }
      if (sub == 0) break;
    }
  }

  cover.number = best[full];
  for (std::uint32_t mask = full; mask != 0; mask ^= pick[mask]) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick[mask] >> i) & 1u) members.push_back(i);
    }
    cover.clusters.push_back(std::move(members));
  }
  return cover;
}

}  // namespace ksat::ledger
