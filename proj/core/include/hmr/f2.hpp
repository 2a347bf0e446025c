#pragma once

#include <cstddef>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hmr/exact.hpp"
#include "hmr/graph.hpp"

namespace hmr {

/// A vector in F_2^dim, dim <= 64, packed little-endian: coordinate i is bit i.
class F2Vector {
 public:
  static constexpr std::size_t kMaxDim = 64;

  F2Vector() = default;
  F2Vector(std::size_t dim, std::uint64_t bits);
  static F2Vector from_coords(std::initializer_list<int> coords);

  std::size_t dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](std::size_t i) const { return (bits_ >> i) & 1U; }
  bool is_zero() const { return bits_ == 0; }

  F2Vector& operator+=(const F2Vector& other);
  friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }
  friend bool operator==(const F2Vector&, const F2Vector&) = default;

  std::string str() const;

 private:
  std::size_t dim_ = 0;
  std::uint64_t bits_ = 0;
};

/// F_2^dim (dim even) with the standard alternating form: coordinates pair
/// up as (0,1), (2,3), ... and each pair contributes u_{2i} v_{2i+1} + u_{2i+1} v_{2i}.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::uint64_t vector_count() const { return std::uint64_t{1} << dim_; }

  /// Form on packed coordinates, no dimension checks.
  static bool pair_bits(std::uint64_t u, std::uint64_t v) {
    constexpr std::uint64_t even = 0x5555555555555555ULL;
    const std::uint64_t swapped = ((v & even) << 1U) | ((v >> 1U) & even);
    return (std::popcount(u & swapped) & 1) != 0;
  }

 private:
  std::size_t dim_;
};

bool symplectic_form(const F2Vector& u, const F2Vector& v, const SymplecticSpace& space);

/// Rank of the span over F_2. Vectors must share a dimension.
std::size_t f2_rank(std::span<const F2Vector> vectors);

inline constexpr std::uint64_t kDefaultVertexBudget = std::uint64_t{1} << 14U;

/// Symplectic graph on F_2^{t-2}: u ~ v iff form(u, v) = 1. Vertex i is the
/// vector with packed coordinates i. K_t-free for even t.
Graph build_cf_graph(std::size_t t, std::uint64_t vertex_budget = kDefaultVertexBudget);

/// Number of k-dimensional isotropic subspaces of the (t-2)-dimensional
/// symplectic space, 0 <= k <= t/2 - 1. Exact.
BigInt count_isotropic_subspaces(std::size_t t, std::size_t k);

/// A subspace given by its reduced row echelon basis: rows ordered by
/// decreasing leading bit, each leading bit cleared in every other row.
struct Subspace {
  std::vector<std::uint64_t> basis;

  friend auto operator<=>(const Subspace&, const Subspace&) = default;
  std::vector<std::uint64_t> elements() const;
};

inline constexpr std::size_t kDefaultEnumerationMaxT = 10;

/// Brute-force list of the k-dimensional isotropic subspaces, sorted by basis.
std::vector<Subspace> enumerate_isotropic_subspaces(std::size_t t, std::size_t k,
                                                    std::size_t max_t = kDefaultEnumerationMaxT);

/// Reduced row echelon form of the span of `vectors` (zero rows dropped).
Subspace reduced_basis(std::span<const std::uint64_t> vectors);

}  // namespace hmr
