#include "hmr/f2.hpp"

#include <algorithm>
#include <bit>

#include "hmr/error.hpp"

namespace hmr {

F2Vector::F2Vector(std::size_t dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  if (dim > kMaxDim) throw ArgumentError("F2Vector dimension above 64");
  if (dim < kMaxDim && (bits >> dim) != 0) throw ArgumentError("F2Vector bits exceed dimension");
}

F2Vector F2Vector::from_coords(std::initializer_list<int> coords) {
  std::uint64_t bits = 0;
  std::size_t i = 0;
  for (int c : coords) {
    if (c != 0 && c != 1) throw ArgumentError("F2 coordinates must be 0 or 1");
    if (c == 1) bits |= std::uint64_t{1} << i;
    ++i;
  }
  return {coords.size(), bits};
}

F2Vector& F2Vector::operator+=(const F2Vector& other) {
  if (dim_ != other.dim_) throw ArgumentError("F2Vector dimension mismatch");
  bits_ ^= other.bits_;
  return *this;
}

std::string F2Vector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i != 0) s += ',';
    s += (*this)[i] ? '1' : '0';
  }
  return s + ")";
}

SymplecticSpace::SymplecticSpace(std::size_t dim) : dim_(dim) {
  if (dim % 2 != 0 || dim == 0) throw ArgumentError("symplectic space needs even dim >= 2");
  if (dim > F2Vector::kMaxDim) throw ArgumentError("symplectic space dim above 64");
}

bool symplectic_form(const F2Vector& u, const F2Vector& v, const SymplecticSpace& space) {
  if (u.dim() != space.dim() || v.dim() != space.dim()) {
    throw ArgumentError("symplectic_form: vector dimension does not match the space");
  }
  return SymplecticSpace::pair_bits(u.bits(), v.bits());
}

std::size_t f2_rank(std::span<const F2Vector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().dim();
  std::vector<std::uint64_t> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw ArgumentError("f2_rank: vectors of different dimensions");
    rows.push_back(v.bits());
  }
  return reduced_basis(rows).basis.size();
}

Subspace reduced_basis(std::span<const std::uint64_t> vectors) {
  std::vector<std::uint64_t> rows(vectors.begin(), vectors.end());
  std::vector<std::uint64_t> basis;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin(), rows.end(), [mask](auto r) { return (r & mask) != 0; });
    if (pivot == rows.end()) continue;
    const std::uint64_t p = *pivot;
    rows.erase(pivot);
    for (auto& r : rows)
      if (r & mask) r ^= p;
    for (auto& b : basis)
      if (b & mask) b ^= p;
    basis.push_back(p);
  }
  return {basis};
}

std::vector<std::uint64_t> Subspace::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << basis.size()); ++m) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((m >> i) & 1U) v ^= basis[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_even_t(std::size_t t, std::size_t min_t) {
  if (t % 2 != 0) throw ArgumentError("t must be even, got " + std::to_string(t));
  if (t < min_t) throw ArgumentError("t must be at least " + std::to_string(min_t));
}

void check_isotropic_dim(std::size_t t, std::size_t k) {
  if (k + 1 > t / 2) {
    throw ArgumentError("no isotropic subspace of dimension " + std::to_string(k) +
                        " for t=" + std::to_string(t) + " (need k <= t/2 - 1)");
  }
}

}  // namespace

Graph build_cf_graph(std::size_t t, std::uint64_t vertex_budget) {
  check_even_t(t, 4);
  const std::size_t dim = t - 2;
  if (dim >= 63 || (std::uint64_t{1} << dim) > vertex_budget) {
    throw ArgumentError("2^" + std::to_string(dim) + " vertices exceed the vertex budget of " +
                        std::to_string(vertex_budget));
  }
  const std::size_t n = std::size_t{1} << dim;
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (SymplecticSpace::pair_bits(u, v)) g.add_edge(u, v);
  return g;
}

BigInt count_isotropic_subspaces(std::size_t t, std::size_t k) {
  check_even_t(t, 2);
  check_isotropic_dim(t, k);
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= (BigInt(1) << (t - 2 - 2 * i)) - 1;
    den *= (BigInt(1) << (k - i)) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_isotropic_subspaces(std::size_t t, std::size_t k,
                                                    std::size_t max_t) {
  check_even_t(t, 2);
  check_isotropic_dim(t, k);
  if (t > max_t) {
    throw ResourceError("isotropic enumeration limited to t <= " + std::to_string(max_t));
  }
  const std::size_t dim = t - 2;
  std::vector<Subspace> out;

  // Walk every reduced echelon basis: choose leading bits, then the free
  // (non-leading, lower) positions of each row.
  std::vector<std::size_t> pivots(k);
  auto visit_pivots = [&](const std::vector<std::size_t>& piv) {
    std::uint64_t pivot_mask = 0;
    for (auto p : piv) pivot_mask |= std::uint64_t{1} << p;
    std::vector<std::vector<std::size_t>> free_positions(k);
    std::size_t total_free = 0;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t j = 0; j < piv[r]; ++j)
        if (!((pivot_mask >> j) & 1U)) free_positions[r].push_back(j);
      total_free += free_positions[r].size();
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << total_free); ++m) {
      std::vector<std::uint64_t> rows(k);
      std::size_t used = 0;
      for (std::size_t r = 0; r < k; ++r) {
        rows[r] = std::uint64_t{1} << piv[r];
        for (auto j : free_positions[r])
          if ((m >> used++) & 1U) rows[r] |= std::uint64_t{1} << j;
      }
      bool isotropic = true;
      for (std::size_t a = 0; a < k && isotropic; ++a)
        for (std::size_t b = a + 1; b < k && isotropic; ++b)
          isotropic = !SymplecticSpace::pair_bits(rows[a], rows[b]);
      if (isotropic) out.push_back(Subspace{std::move(rows)});
    }
  };

  // Decreasing pivot sequences p_0 > p_1 > ... > p_{k-1} in [0, dim).
  auto choose = [&](auto&& self, std::size_t r, std::size_t upper) -> void {
    if (r == k) {
      visit_pivots(pivots);
      return;
    }
    for (std::size_t p = upper; p-- > k - r - 1;) {
      pivots[r] = p;
      self(self, r + 1, p);
    }
  };
  if (k == 0) {
    out.push_back(Subspace{});
  } else {
    choose(choose, 0, dim);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hmr
