#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmr/exact.hpp"
#include "hmr/graph.hpp"

namespace hmr {

/// Sentinel clique size meaning "no restriction".
inline constexpr std::size_t kNoCliqueLimit = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kLabeledEnumerationMaxN = 8;

/// Adjacency rows (bit v of row u) of a labelled graph on at most 8 vertices.
using SmallGraphVisitor = std::function<void(std::span<const std::uint64_t> rows)>;

/// Visits every labelled K_t-free graph on n vertices (n <= 8). Edges are
/// decided in lexicographic pair order and an edge is only added when it
/// does not complete a K_t. Returns the number visited.
std::uint64_t for_each_ktfree(std::size_t n, std::size_t t, const SmallGraphVisitor& visit);

/// Materialised form of for_each_ktfree.
std::vector<Graph> enumerate_ktfree(std::size_t n, std::size_t t);

/// Sharded scan: shard k covers the graphs whose first few edge decisions
/// spell k. visit(shard, rows) may run concurrently for different shards.
std::size_t ktfree_shard_count(std::size_t n);
void scan_ktfree_parallel(std::size_t n, std::size_t t, unsigned threads,
                          const std::function<void(std::size_t shard,
                                                   std::span<const std::uint64_t> rows)>& visit);

/// graph6 of the lexicographically least relabelling (n <= 8).
std::string canonical_graph6(const Graph& g);

struct SearchOptions {
  unsigned threads = 1;
  bool dedup_iso = false;
  std::size_t witness_cap = 10000;
};

struct SearchResult {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t n_max = 0;
  RationalProb min_prob;
  std::vector<std::string> witnesses;  // graph6, sorted
  std::uint64_t witness_count = 0;     // before the cap / dedup
  std::uint64_t graphs_scanned = 0;
  /// Known lower bound on P(s,t) (P(1,t) = P(s,2) = 1, P(2,t) = 1/(t-1),
  /// P(3,3) = 1/4), when one applies.
  std::optional<RationalProb> proven_lower;
  /// Restricted minimum meets proven_lower, so it is the true infimum.
  bool exact() const { return proven_lower && *proven_lower == min_prob; }
};

/// Minimum exact independence probability over K_t-free graphs on
/// 1..n_max vertices (restricted to n <= n_max).
SearchResult min_independence_prob(std::size_t s, std::size_t t, std::size_t n_max,
                                   const SearchOptions& options = {});

struct TuranReport {
  std::size_t n_max = 0;
  std::size_t t = 0;
  bool all_pass = true;
  std::uint64_t graphs_checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> extremal;  // graph6 of graphs meeting the bound with equality
  std::uint64_t extremal_count = 0;
};

/// Checks 2(t-1) m <= (t-2) n^2 for every K_t-free graph with n <= n_max.
TuranReport turan_check(std::size_t n_max, std::size_t t, const SearchOptions& options = {});

/// n <= 5: the C5 colouring restricted to n vertices has no monochromatic
/// triangle. n = 6: every one of the 2^15 two-colourings has one. Returns
/// whether the respective statement holds.
bool verify_r33(std::size_t n);

}  // namespace hmr
