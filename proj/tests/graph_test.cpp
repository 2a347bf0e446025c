#include <cmath>
#include <random>

#include "doctest.h"
#include "hmr/error.hpp"
#include "hmr/f2.hpp"
#include "hmr/graph.hpp"
#include "oracles.hpp"

using namespace hmr;

TEST_CASE("graph basics") {
  Graph g(3);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), ArgumentError);
  CHECK_THROWS_AS(g.add_edge(0, 3), ArgumentError);
  g.remove_edge(2, 0);
  CHECK(g.edge_count() == 0);

  Graph wide(130);
  wide.add_edge(3, 129);
  CHECK(wide.adjacent(129, 3));
  CHECK(wide.degree(129) == 1);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(6)).edge_count() == 0);
  CHECK(complement(Graph(6)) == Graph::complete(6));
  CHECK(complement(Graph::cycle(5)).edge_count() == 5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(1 + i, 0.4, rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("sample_er_graph extremes and errors") {
  CHECK(sample_er_graph(10, 0.0, 123).edge_count() == 0);
  CHECK(sample_er_graph(10, 1.0, 123) == Graph::complete(10));
  CHECK_THROWS_AS(sample_er_graph(10, 1.5, 1), ArgumentError);
  CHECK_THROWS_AS(sample_er_graph(10, -0.1, 1), ArgumentError);
  CHECK_THROWS_AS(sample_er_graph(10, std::nan(""), 1), ArgumentError);
}

TEST_CASE("sample_er_graph is deterministic per seed") {
  CHECK(sample_er_graph(40, 0.3, 99) == sample_er_graph(40, 0.3, 99));
  CHECK_FALSE(sample_er_graph(40, 0.3, 99) == sample_er_graph(40, 0.3, 100));
  // prefix stability: pair draws depend only on the pair index
  const Graph small = sample_er_graph(12, 0.5, 5);
  const Graph large = sample_er_graph(12, 0.5, 5);
  CHECK(small == large);
}

TEST_CASE("sample_er_graph edge counts match binomial(435, 1/2)") {
  const double mean = 217.5;
  const double sd = std::sqrt(435 * 0.25);
  int inside = 0;
  double total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = static_cast<double>(sample_er_graph(30, 0.5, seed).edge_count());
    total += m;
    if (std::abs(m - mean) <= 4 * sd) ++inside;
  }
  CHECK(inside == 100);
  CHECK(std::abs(total / 100 - mean) <= 4 * sd / 10);
}

TEST_CASE("independence profile examples") {
  const auto k3 = independence_profile(Graph::complete(3), 3);
  CHECK(k3.counts == std::vector<BigInt>{1, 3, 0, 0});
  const auto c5 = independence_profile(Graph::cycle(5), 3);
  CHECK(c5.counts == std::vector<BigInt>{1, 5, 5, 0});
  const auto cf4 = independence_profile(build_cf_graph(4), 3);
  CHECK(cf4.counts == std::vector<BigInt>{1, 4, 3, 0});
  const auto empty = independence_profile(Graph(9), 9);
  for (std::size_t k = 0; k <= 9; ++k) CHECK(empty[k] == binomial(9, k));
  CHECK_THROWS_AS(independence_profile(Graph(65), 2), ResourceError);
  CHECK(independence_profile(Graph(64), 2)[2] == 2016);
}

TEST_CASE("independence profile agrees with subset enumeration") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const double p = (trial % 5) / 4.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const auto profile = independence_profile(g, n);
    BigInt sum = 0;
    bool zero_seen = false;
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(profile[k] == oracle::subset_independent_count(g, k));
      CHECK(profile[k] <= binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
      if (zero_seen) CHECK(profile[k] == 0);
      zero_seen = zero_seen || profile[k] == 0;
      sum += profile[k];
    }
    CHECK(profile[0] == 1);
    CHECK(profile[1] == n);
    CHECK(sum <= BigInt(1) << n);
  }
}
