#include <random>

#include "doctest.h"
#include "hmr/clique.hpp"
#include "hmr/error.hpp"
#include "hmr/f2.hpp"
#include "oracles.hpp"

using namespace hmr;

TEST_CASE("clique examples") {
  CHECK(has_clique(Graph::complete(5), 5));
  CHECK_FALSE(has_clique(Graph::cycle(5), 3));
  CHECK(max_clique_size(Graph(7)) == 1);
  CHECK(max_clique_size(Graph::cycle(5)) == 2);
  CHECK(max_clique_size(build_cf_graph(4)) == 3);
  CHECK(max_clique_size(Graph()) == 0);
  CHECK_FALSE(has_clique(build_cf_graph(6), 6));
  CHECK(has_clique(Graph(1), 1));
  CHECK_FALSE(has_clique(Graph(3), 2));
  CHECK_THROWS_AS(has_clique(Graph(3), 0), ArgumentError);
}

TEST_CASE("clique witness is valid and has the requested size") {
  const Graph k6 = Graph::complete(6);
  const auto w = find_clique(k6, 4);
  REQUIRE(w);
  CHECK(w->size() == 4);
  CHECK(is_clique(k6, *w));
}

TEST_CASE("clique search agrees with subset enumeration") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const double p = 0.2 + 0.6 * ((trial * 7) % 10) / 10.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const std::size_t omega = oracle::subset_clique_number(g);
    const auto best = maximum_clique(g);
    CHECK(best.size() == omega);
    CHECK(is_clique(g, best));
    for (std::size_t t = 1; t <= n; ++t) {
      const auto witness = find_clique(g, t);
      CHECK(witness.has_value() == (omega >= t));
      if (witness) {
        CHECK(witness->size() == t);
        CHECK(is_clique(g, *witness));
      }
    }
  }
}

TEST_CASE("clique search on larger random graphs stays consistent") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = sample_er_graph(90, 0.5, seed);
    const auto best = maximum_clique(g);
    CHECK(is_clique(g, best));
    CHECK(has_clique(g, best.size()));
    CHECK_FALSE(has_clique(g, best.size() + 1));
  }
}
