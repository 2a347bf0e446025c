#include "hmr/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <thread>

#include "hmr/error.hpp"
#include "hmr/graph6.hpp"
#include "hmr/halfmult.hpp"
#include "hmr/parallel.hpp"

namespace hmr {
namespace {

constexpr std::size_t kPrefixEdges = 8;

void check_n(std::size_t n) {
  if (n > kLabeledEnumerationMaxN) {
    throw ResourceError("labelled enumeration is limited to n <= " +
                        std::to_string(kLabeledEnumerationMaxN) + " (got " + std::to_string(n) + ")");
  }
}

bool contains_clique(const std::array<std::uint64_t, 8>& rows, std::uint64_t mask, std::size_t k) {
  if (k == 0) return true;
  if (static_cast<std::size_t>(std::popcount(mask)) < k) return false;
  while (mask != 0) {
    const int v = std::countr_zero(mask);
    mask &= mask - 1;
    if (contains_clique(rows, mask & rows[static_cast<std::size_t>(v)], k - 1)) return true;
  }
  return false;
}

class Enumerator {
 public:
  Enumerator(std::size_t n, std::size_t t) : n_(n), t_(t) {
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    std::sort(pairs_.begin(), pairs_.end());
  }

  std::size_t edge_slots() const { return pairs_.size(); }
  std::size_t prefix() const { return std::min(kPrefixEdges, pairs_.size()); }

  template <typename Visit>
  std::uint64_t run_shard(std::size_t shard, Visit&& visit) {
    rows_.fill(0);
    if (t_ <= 1) return 0;  // only the empty graph is K_1-free
    const std::size_t p = prefix();
    for (std::size_t e = 0; e < p; ++e) {
      if ((shard >> (p - 1 - e)) & 1U) {
        if (!try_add(e)) return 0;
      }
    }
    std::uint64_t visited = 0;
    dfs(p, visit, visited);
    return visited;
  }

 private:
  bool creates_clique(std::size_t u, std::size_t v) const {
    if (t_ == kNoCliqueLimit) return false;
    if (t_ <= 2) return true;
    return contains_clique(rows_, rows_[u] & rows_[v], t_ - 2);
  }

  bool try_add(std::size_t e) {
    const auto [u, v] = pairs_[e];
    if (creates_clique(u, v)) return false;
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
    return true;
  }

  void remove(std::size_t e) {
    const auto [u, v] = pairs_[e];
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  template <typename Visit>
  void dfs(std::size_t e, Visit& visit, std::uint64_t& visited) {
    if (e == pairs_.size()) {
      ++visited;
      visit(std::span<const std::uint64_t>(rows_.data(), n_));
      return;
    }
    dfs(e + 1, visit, visited);
    if (try_add(e)) {
      dfs(e + 1, visit, visited);
      remove(e);
    }
  }

  std::size_t n_;
  std::size_t t_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::array<std::uint64_t, 8> rows_{};
};

Graph graph_from_rows(std::span<const std::uint64_t> rows) {
  Graph g(rows.size());
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (std::size_t v = u + 1; v < rows.size(); ++v)
      if ((rows[u] >> v) & 1U) g.add_edge(u, v);
  return g;
}

std::string rows_graph6(std::span<const std::uint64_t> rows) { return to_graph6(graph_from_rows(rows)); }

void finish_witnesses(std::vector<std::string>& list, bool dedup_iso, std::size_t cap) {
  if (dedup_iso) {
    for (auto& w : list) w = canonical_graph6(from_graph6(w));
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (list.size() > cap) list.resize(cap);
}

}  // namespace

std::uint64_t for_each_ktfree(std::size_t n, std::size_t t, const SmallGraphVisitor& visit) {
  check_n(n);
  if (t == 0) throw ArgumentError("clique size must be at least 1");
  Enumerator en(n, t);
  std::uint64_t total = 0;
  if (n == 0) {
    visit({});
    return 1;
  }
  const std::size_t shards = std::size_t{1} << en.prefix();
  for (std::size_t k = 0; k < shards; ++k) total += en.run_shard(k, visit);
  return total;
}

std::vector<Graph> enumerate_ktfree(std::size_t n, std::size_t t) {
  std::vector<Graph> out;
  for_each_ktfree(n, t, [&](std::span<const std::uint64_t> rows) {
    out.push_back(graph_from_rows(rows));
  });
  return out;
}

std::size_t ktfree_shard_count(std::size_t n) {
  check_n(n);
  return std::size_t{1} << Enumerator(n, kNoCliqueLimit).prefix();
}

void scan_ktfree_parallel(std::size_t n, std::size_t t, unsigned threads,
                          const std::function<void(std::size_t, std::span<const std::uint64_t>)>& visit) {
  check_n(n);
  if (t == 0) throw ArgumentError("clique size must be at least 1");
  const std::size_t shards = ktfree_shard_count(n);
  if (n == 0) {
    visit(0, {});
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Enumerator en(n, t);
    for (std::size_t k = next++; k < shards; k = next++) {
      en.run_shard(k, [&](std::span<const std::uint64_t> rows) { visit(k, rows); });
    }
  };
  const unsigned count = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(shards));
  if (count <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
}

std::string canonical_graph6(const Graph& g) {
  const std::size_t n = g.size();
  check_n(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> best_perm = perm;
  const std::size_t slots = n * (n - (n > 0 ? 1 : 0)) / 2;
  do {
    std::uint64_t key = 0;
    std::size_t idx = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i, ++idx)
        if (g.adjacent(perm[i], perm[j])) key |= std::uint64_t{1} << (slots - 1 - idx);
    if (key < best) {
      best = key;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Graph h(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.adjacent(best_perm[i], best_perm[j])) h.add_edge(i, j);
  return to_graph6(h);
}

SearchResult min_independence_prob(std::size_t s, std::size_t t, std::size_t n_max,
                                   const SearchOptions& options) {
  if (s == 0) throw ArgumentError("s must be at least 1");
  if (t < 2) throw ArgumentError("t must be at least 2");
  if (n_max == 0) throw ArgumentError("n_max must be at least 1");
  if (options.witness_cap == 0) throw ArgumentError("witness_cap must be positive");
  check_n(n_max);

  // weights[k] = k! S(s, k)
  std::vector<BigInt> weights(std::min(s, n_max) + 1);
  BigInt fact = 1;
  for (std::size_t k = 1; k < weights.size(); ++k) {
    fact *= k;
    weights[k] = fact * stirling2(static_cast<std::int64_t>(s), static_cast<std::int64_t>(k));
  }
  std::vector<BigInt> n_pow(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) n_pow[n] = pow_int(BigInt(n), s);

  struct Best {
    bool set = false;
    BigInt num;
    std::size_t n = 0;
    std::vector<std::string> witnesses;
    std::uint64_t witness_count = 0;
    std::uint64_t scanned = 0;
  };
  // a/n_a^s  vs  b/n_b^s
  auto compare = [&](const BigInt& a, std::size_t na, const BigInt& b, std::size_t nb) {
    const BigInt lhs = a * n_pow[nb];
    const BigInt rhs = b * n_pow[na];
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  };
  auto offer = [&](Best& best, const BigInt& num, std::size_t n, auto&& make_witness,
                   std::uint64_t multiplicity, std::vector<std::string> extra = {}) {
    const int c = best.set ? compare(num, n, best.num, best.n) : -1;
    if (c < 0) {
      best.set = true;
      best.num = num;
      best.n = n;
      best.witnesses.clear();
      best.witness_count = 0;
    }
    if (c <= 0) {
      best.witness_count += multiplicity;
      if (extra.empty()) {
        if (best.witnesses.size() < options.witness_cap) best.witnesses.push_back(make_witness());
      } else {
        best.witnesses.insert(best.witnesses.end(), extra.begin(), extra.end());
      }
    }
  };

  Best global;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Best> shard_best(ktfree_shard_count(n));
    scan_ktfree_parallel(n, t, options.threads,
                         [&](std::size_t shard, std::span<const std::uint64_t> rows) {
                           Best& b = shard_best[shard];
                           ++b.scanned;
                           const auto counts = independence_counts(rows, weights.size() - 1);
                           BigInt num = 0;
                           for (std::size_t k = 1; k < counts.size(); ++k) {
                             if (counts[k] == 0) break;
                             num += BigInt(counts[k]) * weights[k];
                           }
                           offer(b, num, n, [&] { return rows_graph6(rows); }, 1);
                         });
    for (auto& b : shard_best) {
      global.scanned += b.scanned;
      if (!b.set) continue;
      offer(global, b.num, b.n, [] { return std::string(); }, b.witness_count, b.witnesses);
      if (global.witnesses.size() > 4 * options.witness_cap) {
        finish_witnesses(global.witnesses, false, options.witness_cap);
      }
    }
  }

  SearchResult result;
  result.s = s;
  result.t = t;
  result.n_max = n_max;
  result.min_prob = RationalProb(global.num, n_pow[global.n]);
  finish_witnesses(global.witnesses, options.dedup_iso, options.witness_cap);
  result.witnesses = std::move(global.witnesses);
  result.witness_count = global.witness_count;
  result.graphs_scanned = global.scanned;
  if (s == 1 || t == 2) {
    result.proven_lower = RationalProb(BigRational(1));
  } else if (s == 2) {
    result.proven_lower = RationalProb(BigInt(1), BigInt(t - 1));
  } else if (s == 3 && t == 3) {
    result.proven_lower = RationalProb(BigInt(1), BigInt(4));
  }
  return result;
}

TuranReport turan_check(std::size_t n_max, std::size_t t, const SearchOptions& options) {
  if (t < 2) throw ArgumentError("t must be at least 2");
  check_n(n_max);
  TuranReport report;
  report.n_max = n_max;
  report.t = t;
  for (std::size_t n = 1; n <= n_max; ++n) {
    struct Shard {
      std::uint64_t checked = 0;
      std::uint64_t violations = 0;
      std::uint64_t extremal_count = 0;
      std::vector<std::string> extremal;
    };
    std::vector<Shard> shards(ktfree_shard_count(n));
    const std::uint64_t rhs = static_cast<std::uint64_t>(t - 2) * n * n;
    scan_ktfree_parallel(n, t, options.threads,
                         [&](std::size_t k, std::span<const std::uint64_t> rows) {
                           Shard& sh = shards[k];
                           ++sh.checked;
                           std::uint64_t degree_sum = 0;
                           for (auto r : rows) degree_sum += static_cast<std::uint64_t>(std::popcount(r));
                           const std::uint64_t lhs = (t - 1) * degree_sum;  // 2(t-1)m
                           if (lhs > rhs) ++sh.violations;
                           if (lhs == rhs) {
                             ++sh.extremal_count;
                             if (sh.extremal.size() < options.witness_cap)
                               sh.extremal.push_back(rows_graph6(rows));
                           }
                         });
    for (auto& sh : shards) {
      report.graphs_checked += sh.checked;
      report.violations += sh.violations;
      report.extremal_count += sh.extremal_count;
      report.extremal.insert(report.extremal.end(), sh.extremal.begin(), sh.extremal.end());
    }
    if (report.extremal.size() > 4 * options.witness_cap) {
      finish_witnesses(report.extremal, false, options.witness_cap);
    }
  }
  finish_witnesses(report.extremal, options.dedup_iso, options.witness_cap);
  report.all_pass = report.violations == 0;
  return report;
}

namespace {

bool has_mono_triangle(std::size_t n, const std::function<int(std::size_t, std::size_t)>& color) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (color(a, b) == color(a, c) && color(a, b) == color(b, c)) return true;
  return false;
}

}  // namespace

bool verify_r33(std::size_t n) {
  if (n > 6) throw ArgumentError("verify_r33 handles n <= 6");
  if (n < 6) {
    // Pentagon edges in colour 1, chords in colour 2.
    return !has_mono_triangle(n, [](std::size_t i, std::size_t j) {
      const std::size_t d = (j + 5 - i) % 5;
      return (d == 1 || d == 4) ? 1 : 2;
    });
  }
  std::array<std::array<std::size_t, 6>, 6> index{};
  std::size_t next = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) index[i][j] = index[j][i] = next++;
  for (std::uint32_t mask = 0; mask < (1U << 15U); ++mask) {
    const bool mono = has_mono_triangle(6, [&](std::size_t i, std::size_t j) {
      return static_cast<int>((mask >> index[i][j]) & 1U);
    });
    if (!mono) return false;
  }
  return true;
}

}  // namespace hmr
