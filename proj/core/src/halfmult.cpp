#include "hmr/halfmult.hpp"

#include <atomic>
#include <cmath>

#include "hmr/error.hpp"
#include "hmr/parallel.hpp"
#include "hmr/rng.hpp"

namespace hmr {

namespace {
std::size_t tri_index(std::size_t s, std::size_t k) { return s * (s + 1) / 2 + k; }
}  // namespace

StirlingTable::StirlingTable(std::size_t s_max)
    : s_max_(s_max), table_(tri_index(s_max, s_max) + 1) {
  table_[0] = 1;
  for (std::size_t s = 1; s <= s_max; ++s) {
    table_[tri_index(s, 0)] = 0;
    for (std::size_t k = 1; k <= s; ++k) {
      const BigInt above = k < s ? table_[tri_index(s - 1, k)] : BigInt(0);
      table_[tri_index(s, k)] = k * above + table_[tri_index(s - 1, k - 1)];
    }
  }
}

const BigInt& StirlingTable::operator()(std::size_t s, std::size_t k) const {
  if (s > s_max_) throw ArgumentError("Stirling table holds s <= " + std::to_string(s_max_));
  if (k > s) return zero_;
  return table_[tri_index(s, k)];
}

const StirlingTable& StirlingTable::shared() {
  static const StirlingTable table;
  return table;
}

BigInt stirling2(std::int64_t s, std::int64_t k) {
  if (s < 0 || k < 0) throw ArgumentError("stirling2 arguments must be nonnegative");
  if (k > s) return 0;
  const auto su = static_cast<std::size_t>(s);
  const auto ku = static_cast<std::size_t>(k);
  if (su <= StirlingTable::kDefaultMax) return StirlingTable::shared()(su, ku);
  return StirlingTable(su)(su, ku);
}

RationalProb independence_prob_from_counts(std::span<const BigInt> counts, std::size_t n,
                                           std::size_t s) {
  if (n == 0) throw ArgumentError("independence probability of the empty graph is undefined");
  if (s == 0) return RationalProb(BigRational(1));
  if (counts.size() < s + 1) throw ArgumentError("independence counts shorter than s + 1");
  const StirlingTable local(s > StirlingTable::kDefaultMax ? s : 0);
  const StirlingTable& stirling = s > StirlingTable::kDefaultMax ? local : StirlingTable::shared();
  BigInt numerator = 0;
  BigInt k_factorial = 1;
  for (std::size_t k = 1; k <= s; ++k) {
    k_factorial *= k;
    if (counts[k] == 0) break;  // independent sets are hereditary
    numerator += counts[k] * k_factorial * stirling(s, k);
  }
  return {numerator, pow_int(BigInt(n), s)};
}

RationalProb exact_independence_prob(const Graph& g, std::size_t s) {
  if (s == 0) throw ArgumentError("s must be at least 1");
  if (g.size() > kExactCountingBudget) {
    throw ResourceError("graph has " + std::to_string(g.size()) +
                        " vertices, above the exact-counting budget of 64; use "
                        "mc_independence_prob (estimate) instead");
  }
  const auto profile = independence_profile(g, s);
  return independence_prob_from_counts(profile.counts, g.size(), s);
}

McEstimate mc_independence_prob(const Graph& g, std::size_t s, std::uint64_t trials,
                                std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw ArgumentError("trials must be at least 1");
  if (s == 0) throw ArgumentError("s must be at least 1");
  if (g.size() == 0) throw ArgumentError("cannot sample vertices of the empty graph");
  const CounterRng root(seed);
  std::atomic<std::uint64_t> successes{0};
  parallel_chunks(trials, resolve_threads(threads),
                  [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                    std::vector<std::size_t> picked(s);
                    std::uint64_t local = 0;
                    for (std::uint64_t trial = begin; trial < end; ++trial) {
                      CounterRng rng = root.substream(trial);
                      for (auto& v : picked) v = rng.next_below(g.size());
                      bool independent = true;
                      for (std::size_t a = 0; a < s && independent; ++a)
                        for (std::size_t b = a + 1; b < s && independent; ++b)
                          independent = !g.adjacent(picked[a], picked[b]);
                      local += independent ? 1 : 0;
                    }
                    successes += local;
                  });
  McEstimate out;
  out.trials = trials;
  out.successes = successes.load();
  out.seed = seed;
  out.estimate = static_cast<double>(out.successes) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
  return out;
}

}  // namespace hmr
