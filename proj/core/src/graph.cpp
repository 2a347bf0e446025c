#include "hmr/graph.hpp"

#include <bit>
#include <string>

#include "hmr/error.hpp"
#include "hmr/rng.hpp"

namespace hmr {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  if (n >= 3)
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) {
    throw ArgumentError("vertex out of range: {" + std::to_string(u) + "," + std::to_string(v) +
                        "} in graph on " + std::to_string(n_) + " vertices");
  }
  if (u == v) throw ArgumentError("self-loops are not allowed");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  rows_[u * words_ + (v >> 6U)] |= std::uint64_t{1} << (v & 63U);
  rows_[v * words_ + (u >> 6U)] |= std::uint64_t{1} << (u & 63U);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  rows_[u * words_ + (v >> 6U)] &= ~(std::uint64_t{1} << (v & 63U));
  rows_[v * words_ + (u >> 6U)] &= ~(std::uint64_t{1} << (u & 63U));
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto w : rows_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::uint64_t> Graph::row_masks() const {
  if (n_ > 64) throw ResourceError("row_masks requires at most 64 vertices");
  std::vector<std::uint64_t> masks(n_);
  for (std::size_t v = 0; v < n_; ++v) masks[v] = rows_[v * words_];
  return masks;
}

Graph complement(const Graph& g) {
  Graph h(g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph sample_er_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in [0,1]");
  if (n < 1) throw ArgumentError("sample_er_graph needs n >= 1");
  const CounterRng rng(seed);
  Graph g(n);
  std::uint64_t pair = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++pair) {
      if (rng.unit_at(pair) < p) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

struct SubsetCounter {
  std::span<const std::uint64_t> non_adjacent;
  std::size_t s_max;
  std::vector<std::uint64_t>& counts;

  // `cands` holds vertices that extend the current independent set of size
  // `depth` and are larger than all of its members.
  void extend(std::uint64_t cands, std::size_t depth) {
    if (depth + 1 == s_max) {
      counts[s_max] += static_cast<std::uint64_t>(std::popcount(cands));
      return;
    }
    while (cands != 0) {
      const int v = std::countr_zero(cands);
      cands &= cands - 1;
      ++counts[depth + 1];
      const std::uint64_t next = cands & non_adjacent[static_cast<std::size_t>(v)];
      if (next != 0) extend(next, depth + 1);
    }
  }
};

}  // namespace

std::vector<std::uint64_t> independence_counts(std::span<const std::uint64_t> adjacency,
                                               std::size_t s_max) {
  const std::size_t n = adjacency.size();
  if (n > kExactCountingBudget) {
    throw ResourceError("exact independence counting is limited to 64 vertices");
  }
  std::vector<std::uint64_t> counts(s_max + 1, 0);
  counts[0] = 1;
  if (s_max == 0 || n == 0) return counts;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> non_adjacent(n);
  for (std::size_t v = 0; v < n; ++v) {
    non_adjacent[v] = ~adjacency[v] & all & ~(std::uint64_t{1} << v);
  }
  SubsetCounter{non_adjacent, s_max, counts}.extend(all, 0);
  return counts;
}

IndependenceProfile independence_profile(const Graph& g, std::size_t s_max) {
  if (g.size() > kExactCountingBudget) {
    throw ResourceError("graph has " + std::to_string(g.size()) +
                        " vertices; exact independence counting is limited to 64");
  }
  const auto masks = g.row_masks();
  const auto raw = independence_counts(masks, s_max);
  IndependenceProfile profile;
  profile.s_max = s_max;
  profile.counts.reserve(raw.size());
  for (auto c : raw) profile.counts.emplace_back(c);
  return profile;
}

}  // namespace hmr
