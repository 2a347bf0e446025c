#pragma once

// Brute-force reference computations for tests. Deliberately naive and
// independent of the library's counting and search code paths.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hmr/exact.hpp"
#include "hmr/graph.hpp"

namespace hmr::oracle {

/// Probability that s i.i.d. uniform vertices form an independent set,
/// by iterating all n^s ordered tuples.
inline BigRational tuple_independence_prob(const Graph& g, std::size_t s) {
  const std::size_t n = g.size();
  std::vector<std::size_t> tuple(s, 0);
  std::uint64_t good = 0;
  std::uint64_t total = 0;
  while (true) {
    bool independent = true;
    for (std::size_t a = 0; a < s && independent; ++a)
      for (std::size_t b = 0; b < s && independent; ++b)
        if (tuple[a] != tuple[b] && g.adjacent(tuple[a], tuple[b])) independent = false;
    good += independent ? 1 : 0;
    ++total;
    std::size_t pos = 0;
    while (pos < s && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == s) break;
  }
  return BigRational(BigInt(good), BigInt(total));
}

/// Number of k-subsets with no internal edge, by scanning all subsets.
inline std::uint64_t subset_independent_count(const Graph& g, std::size_t k) {
  const std::size_t n = g.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if (((mask >> u) & 1U) && ((mask >> v) & 1U) && g.adjacent(u, v)) ok = false;
    count += ok ? 1 : 0;
  }
  return count;
}

/// Clique number by scanning all subsets.
inline std::size_t subset_clique_number(const Graph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if (((mask >> u) & 1U) && ((mask >> v) & 1U) && !g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// G(n, p) using std::mt19937_64, for generating test inputs only.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace hmr::oracle
