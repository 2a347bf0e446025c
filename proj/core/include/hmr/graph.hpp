#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "hmr/exact.hpp"

namespace hmr {

/// Simple undirected graph stored as one adjacency bitset per vertex.
/// Symmetric, loop-free; mutation is only through add_edge/remove_edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);
  static Graph from_edges(std::size_t n,
                          std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
    return from_edges(n, std::span(edges.begin(), edges.size()));
  }

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + (v >> 6U)] >> (v & 63U)) & 1U;
  }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::span<const std::uint64_t> row(std::size_t v) const {
    return {rows_.data() + v * words_, words_};
  }

  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Single-word rows; only valid when size() <= 64.
  std::vector<std::uint64_t> row_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(std::size_t u, std::size_t v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph complement(const Graph& g);

/// Erdős–Rényi G(n, p). Pair {i<j} with lexicographic index c is an edge iff
/// the c-th draw of CounterRng(seed) is below p, so output depends on
/// (n, p, seed) only.
Graph sample_er_graph(std::size_t n, double p, std::uint64_t seed);

/// Counts I_k of independent k-subsets for k = 0..s_max.
struct IndependenceProfile {
  std::size_t s_max = 0;
  std::vector<BigInt> counts;

  const BigInt& operator[](std::size_t k) const { return counts[k]; }
};

inline constexpr std::size_t kExactCountingBudget = 64;

/// Exact profile via clique counting in the complement.
/// Throws ResourceError when the graph has more than 64 vertices.
IndependenceProfile independence_profile(const Graph& g, std::size_t s_max);

/// Same count on word-sized adjacency masks (n <= 64).
std::vector<std::uint64_t> independence_counts(std::span<const std::uint64_t> adjacency,
                                               std::size_t s_max);

}  // namespace hmr
