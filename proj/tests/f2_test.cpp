#include <algorithm>
#include <set>

#include "doctest.h"
#include "hmr/clique.hpp"
#include "hmr/error.hpp"
#include "hmr/f2.hpp"

using namespace hmr;

TEST_CASE("symplectic form on basis vectors") {
  const SymplecticSpace v2(2);
  CHECK(symplectic_form(F2Vector::from_coords({1, 0}), F2Vector::from_coords({0, 1}), v2));
  CHECK(symplectic_form(F2Vector::from_coords({0, 1}), F2Vector::from_coords({1, 1}), v2));
  CHECK_FALSE(symplectic_form(F2Vector::from_coords({1, 1}), F2Vector::from_coords({1, 1}), v2));
  CHECK_THROWS_AS(symplectic_form(F2Vector(2, 1), F2Vector(4, 1), v2), ArgumentError);
  CHECK_THROWS_AS(SymplecticSpace(3), ArgumentError);
}

TEST_CASE("symplectic form is alternating, symmetric, bilinear and nondegenerate") {
  for (std::size_t dim = 2; dim <= 8; dim += 2) {
    const SymplecticSpace space(dim);
    const std::uint64_t count = space.vector_count();
    for (std::uint64_t u = 0; u < count; ++u) {
      const F2Vector fu(dim, u);
      CHECK_FALSE(symplectic_form(fu, fu, space));
      bool witness = u == 0;
      for (std::uint64_t v = 0; v < count; ++v) {
        const F2Vector fv(dim, v);
        const bool uv = symplectic_form(fu, fv, space);
        witness = witness || uv;
        if (uv != symplectic_form(fv, fu, space)) FAIL("asymmetric at " << u << "," << v);
      }
      CHECK(witness);
    }
    // bilinearity on a sample of triples
    for (std::uint64_t u = 0; u < count; u += 3)
      for (std::uint64_t v = 0; v < count; v += 5)
        for (std::uint64_t w = 0; w < count; w += 7) {
          const F2Vector fu(dim, u), fv(dim, v), fw(dim, w);
          CHECK(symplectic_form(fu + fv, fw, space) ==
                (symplectic_form(fu, fw, space) != symplectic_form(fv, fw, space)));
        }
  }
}

TEST_CASE("f2 vector addition") {
  const auto v = F2Vector::from_coords({1, 0, 1});
  CHECK((v + v).is_zero());
  CHECK((v + F2Vector::from_coords({0, 1, 1})) == F2Vector::from_coords({1, 1, 0}));
  CHECK_THROWS_AS(v + F2Vector(2, 0), ArgumentError);
}

TEST_CASE("f2_rank examples") {
  const std::vector<F2Vector> basis{F2Vector::from_coords({1, 0}), F2Vector::from_coords({0, 1})};
  CHECK(f2_rank(basis) == 2);
  const std::vector<F2Vector> repeated{F2Vector::from_coords({1, 1}), F2Vector::from_coords({1, 1})};
  CHECK(f2_rank(repeated) == 1);
  const std::vector<F2Vector> dependent{F2Vector::from_coords({1, 1, 0, 0}),
                                        F2Vector::from_coords({0, 1, 1, 0}),
                                        F2Vector::from_coords({1, 0, 1, 0})};
  CHECK(f2_rank(dependent) == 2);
  CHECK(f2_rank(std::vector<F2Vector>{}) == 0);
  const std::vector<F2Vector> mixed{F2Vector(2, 1), F2Vector(3, 1)};
  CHECK_THROWS_AS(f2_rank(mixed), ArgumentError);
}

TEST_CASE("all-ones minus identity has full rank over F2 for even size") {
  for (std::size_t t = 2; t <= 16; t += 2) {
    std::vector<F2Vector> rows;
    const std::uint64_t ones = (std::uint64_t{1} << t) - 1;
    for (std::size_t i = 0; i < t; ++i) rows.emplace_back(t, ones & ~(std::uint64_t{1} << i));
    CHECK(f2_rank(rows) == t);
  }
  // odd size: the rows sum to zero
  std::vector<F2Vector> rows;
  for (std::size_t i = 0; i < 5; ++i) rows.emplace_back(5, 31U & ~(1U << i));
  CHECK(f2_rank(rows) == 4);
}

TEST_CASE("symplectic graph structure") {
  const Graph g4 = build_cf_graph(4);
  CHECK(g4.size() == 4);
  CHECK(g4.edge_count() == 3);
  CHECK(g4.degree(0) == 0);
  CHECK(max_clique_size(g4) == 3);

  const Graph g6 = build_cf_graph(6);
  CHECK(g6.size() == 16);
  CHECK(g6.edge_count() == 60);
  for (std::size_t v = 1; v < 16; ++v) CHECK(g6.degree(v) == 8);
  CHECK_FALSE(has_clique(g6, 6));

  CHECK_THROWS_AS(build_cf_graph(5), ArgumentError);
  CHECK_THROWS_AS(build_cf_graph(2), ArgumentError);
  CHECK_THROWS_AS(build_cf_graph(18), ArgumentError);  // 2^16 > default budget
  CHECK(build_cf_graph(8, 64).size() == 64);
}

TEST_CASE("symplectic graphs are K_t-free") {
  for (std::size_t t = 4; t <= 8; t += 2) {
    const Graph g = build_cf_graph(t);
    CHECK_FALSE(has_clique(g, t));
    CHECK(max_clique_size(g) == t - 1);
  }
}

namespace {

// Bron–Kerbosch over the complement: every maximal independent set.
void maximal_independent_sets(const Graph& g, std::vector<std::size_t>& r,
                              std::vector<std::size_t> p, std::vector<std::size_t> x,
                              std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    const std::size_t v = p.back();
    p.pop_back();
    std::vector<std::size_t> np, nx;
    for (auto u : p)
      if (!g.adjacent(u, v)) np.push_back(u);
    for (auto u : x)
      if (!g.adjacent(u, v)) nx.push_back(u);
    r.push_back(v);
    maximal_independent_sets(g, r, np, nx, out);
    r.pop_back();
    x.push_back(v);
  }
}

}  // namespace

TEST_CASE("maximal independent sets of the symplectic graph are isotropic subspaces") {
  for (std::size_t t = 4; t <= 8; t += 2) {
    const Graph g = build_cf_graph(t);
    std::vector<std::size_t> all(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) all[v] = v;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> r;
    maximal_independent_sets(g, r, all, {}, sets);
    const auto lagrangians = enumerate_isotropic_subspaces(t, t / 2 - 1);
    CHECK(sets.size() == lagrangians.size());
    for (const auto& set : sets) {
      const std::set<std::size_t> members(set.begin(), set.end());
      for (auto a : set) {
        for (auto b : set) {
          CHECK_FALSE(SymplecticSpace::pair_bits(a, b));
          CHECK(members.count(a ^ b) == 1);  // closed under addition
        }
      }
    }
  }
}

TEST_CASE("isotropic subspace counts") {
  CHECK(count_isotropic_subspaces(4, 0) == 1);
  CHECK(count_isotropic_subspaces(4, 1) == 3);
  CHECK(count_isotropic_subspaces(6, 1) == 15);
  CHECK(count_isotropic_subspaces(6, 2) == 15);
  CHECK_THROWS_AS(count_isotropic_subspaces(4, 2), ArgumentError);
  CHECK_THROWS_AS(count_isotropic_subspaces(5, 1), ArgumentError);
  // no budget on the closed form
  CHECK(count_isotropic_subspaces(200, 3) > 0);
}

TEST_CASE("enumeration matches the closed-form count") {
  for (std::size_t t = 2; t <= 10; t += 2) {
    for (std::size_t k = 0; k + 1 <= t / 2; ++k) {
      const auto subspaces = enumerate_isotropic_subspaces(t, k);
      CHECK_MESSAGE(BigInt(subspaces.size()) == count_isotropic_subspaces(t, k),
                    "t=" << t << " k=" << k);
      CHECK(std::is_sorted(subspaces.begin(), subspaces.end()));
      for (const auto& sub : subspaces) {
        CHECK(sub.basis.size() == k);
        CHECK(reduced_basis(sub.basis) == sub);
      }
    }
  }
  CHECK(enumerate_isotropic_subspaces(4, 1).size() == 3);
  CHECK(enumerate_isotropic_subspaces(6, 1).size() == 15);
  CHECK_THROWS_AS(enumerate_isotropic_subspaces(4, 2), ArgumentError);
  CHECK_THROWS_AS(enumerate_isotropic_subspaces(12, 1), ResourceError);
}

TEST_CASE("subspace elements") {
  const Subspace plane = reduced_basis(std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110});
  CHECK(plane.basis.size() == 2);
  CHECK(plane.elements() == std::vector<std::uint64_t>{0, 0b0011, 0b0101, 0b0110});
}
