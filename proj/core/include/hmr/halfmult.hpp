#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hmr/exact.hpp"
#include "hmr/graph.hpp"

namespace hmr {

/// Triangular table of Stirling numbers of the second kind, S(s, k) for
/// 0 <= k <= s <= s_max.
class StirlingTable {
 public:
  static constexpr std::size_t kDefaultMax = 64;

  explicit StirlingTable(std::size_t s_max = kDefaultMax);

  std::size_t s_max() const { return s_max_; }
  /// S(s, k); zero when k > s. Requires s <= s_max().
  const BigInt& operator()(std::size_t s, std::size_t k) const;

  /// Process-wide table of size kDefaultMax.
  static const StirlingTable& shared();

 private:
  std::size_t s_max_;
  std::vector<BigInt> table_;
  BigInt zero_;
};

/// S(s, k) by the recurrence S(s,k) = k S(s-1,k) + S(s-1,k-1). Negative
/// arguments throw; k > s gives 0.
BigInt stirling2(std::int64_t s, std::int64_t k);

/// Probability that s i.i.d. uniform vertices (repetition allowed) form an
/// independent set, from the independent-set counts:
///   sum_k I_k * k! * S(s, k) / n^s.
RationalProb independence_prob_from_counts(std::span<const BigInt> counts, std::size_t n,
                                           std::size_t s);

/// Exact value for graphs within the exact-counting budget (64 vertices);
/// beyond it throws ResourceError pointing at mc_independence_prob.
RationalProb exact_independence_prob(const Graph& g, std::size_t s);

struct McEstimate {
  double estimate = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate. Trial i draws its s vertices from
/// CounterRng(seed).substream(i), so the result is the same for any
/// thread count.
McEstimate mc_independence_prob(const Graph& g, std::size_t s, std::uint64_t trials,
                                std::uint64_t seed, unsigned threads = 1);

}  // namespace hmr
