#include "hmr/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hmr/error.hpp"

namespace hmr {
namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t first_bit(const Bits& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
  return b.size() * 64;
}

void clear_bit(Bits& b, std::size_t v) { b[v >> 6U] &= ~(std::uint64_t{1} << (v & 63U)); }

// Branch and bound with greedy colouring bounds over a degree-ordered
// relabelling of the graph (position 0 = highest degree).
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t target)
      : n_(g.size()), words_((g.size() + 63) / 64), target_(target) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&g](std::size_t a, std::size_t b) {
      return g.degree(a) > g.degree(b);
    });
    rows_.assign(n_, Bits(words_, 0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order_[i], order_[j]))
          rows_[i][j >> 6U] |= std::uint64_t{1} << (j & 63U);
  }

  // target == 0: maximise. Otherwise stop at the first clique of that size.
  std::vector<std::size_t> run() {
    if (n_ == 0) return {};
    best_size_ = target_ == 0 ? 0 : target_ - 1;
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v >> 6U] |= std::uint64_t{1} << (v & 63U);
    expand(all);
    std::vector<std::size_t> out;
    out.reserve(best_.size());
    for (auto v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool done() const { return target_ != 0 && best_.size() >= target_; }

  void expand(Bits candidates) {
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    colour(candidates, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (done() || current_.size() + colors[i] <= best_size_) return;
      const std::size_t v = verts[i];
      current_.push_back(v);
      if (target_ != 0 && current_.size() == target_) {
        best_ = current_;
        return;
      }
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & rows_[v][w];
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_size_) {
        best_ = current_;
        best_size_ = current_.size();
      }
      current_.pop_back();
      clear_bit(candidates, v);
    }
  }

  // Greedy sequential colouring; verts come out in non-decreasing colour.
  void colour(const Bits& candidates, std::vector<std::size_t>& verts,
              std::vector<std::size_t>& colors) const {
    Bits uncoloured = candidates;
    std::size_t k = 0;
    while (any(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      while (any(q)) {
        const std::size_t v = first_bit(q);
        clear_bit(q, v);
        clear_bit(uncoloured, v);
        for (std::size_t w = 0; w < words_; ++w) q[w] &= ~rows_[v][w];
        verts.push_back(v);
        colors.push_back(k);
      }
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::size_t target_;
  std::vector<std::size_t> order_;
  std::vector<Bits> rows_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t t) {
  if (t == 0) throw ArgumentError("clique size must be at least 1");
  if (t > g.size()) return std::nullopt;
  auto clique = CliqueSearch(g, t).run();
  if (clique.size() < t) return std::nullopt;
  return clique;
}

std::vector<std::size_t> maximum_clique(const Graph& g) { return CliqueSearch(g, 0).run(); }

bool is_clique(const Graph& g, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

}  // namespace hmr
