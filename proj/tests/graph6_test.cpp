#include <filesystem>
#include <random>

#include "doctest.h"
#include "hmr/error.hpp"
#include "hmr/graph6.hpp"
#include "oracles.hpp"

using namespace hmr;

TEST_CASE("graph6 known encodings") {
  // Reference strings cross-checked with networkx.to_graph6_bytes.
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph::complete(2)) == "A_");
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(to_graph6(Graph::cycle(5)) == "Dhc");
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(from_graph6("Dhc") == Graph::cycle(5));
  CHECK(from_graph6(">>graph6<<Bw\n") == Graph::complete(3));
}

TEST_CASE("graph6 long size field") {
  Graph g(100);
  g.add_edge(0, 99);
  g.add_edge(50, 51);
  const auto text = to_graph6(g);
  CHECK(text.substr(0, 4) == "~?@c");  // 100 = 000000 000001 100100
  CHECK(from_graph6(text) == g);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n < 70; n += 3) {
    const Graph g = oracle::random_graph(n, 0.5, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), FormatError);
  CHECK_THROWS_AS(from_graph6("Dh"), FormatError);    // too short
  CHECK_THROWS_AS(from_graph6("Dhcc"), FormatError);  // too long
  CHECK_THROWS_AS(from_graph6("A\x01"), FormatError);
  CHECK_THROWS_AS(from_graph6("A`"), FormatError);    // nonzero padding bit
  CHECK_THROWS_AS(read_graph6_file("/nonexistent/file.g6"), FormatError);
}

TEST_CASE("graph6 files") {
  const auto path = std::filesystem::temp_directory_path() / "hmr_graph6_test.g6";
  write_graph6_file(path, {Graph::cycle(5), Graph::complete(3)});
  const auto graphs = read_graph6_file(path);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == Graph::cycle(5));
  CHECK(graphs[1] == Graph::complete(3));
  std::filesystem::remove(path);
}
