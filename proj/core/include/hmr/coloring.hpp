#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hmr/graph.hpp"

namespace hmr {

/// An ell-colouring of the edges of K_n together with how it was produced.
///
/// Text layout (one field per line, in this order, '\n' line ends):
///
///     hmr-coloring-certificate 1
///     n <n>
///     ell <ell>
///     t <t>
///     base_graph <graph6 string | cf:<t>>
///     seed <seed>
///     attempts_used <attempts>
///     colors <c_01>,<c_02>,...,<c_{n-2,n-1}>
///
/// Colours are in 1..ell and listed for pairs (i, j), i < j, in row-major
/// order of the upper triangle.
struct ColoringCertificate {
  std::size_t n = 0;
  int ell = 0;
  std::size_t t = 0;
  std::vector<std::uint8_t> colors;
  std::string base_graph;
  std::uint64_t seed = 0;
  std::uint64_t attempts_used = 0;

  std::uint8_t color(std::size_t i, std::size_t j) const;
  void set_color(std::size_t i, std::size_t j, std::uint8_t c);

  friend bool operator==(const ColoringCertificate&, const ColoringCertificate&) = default;
};

/// Index of pair (i, j), i < j, in the upper-triangular row-major array.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

std::string to_text(const ColoringCertificate& cert);
/// Throws FormatError on any deviation from the documented layout.
ColoringCertificate certificate_from_text(const std::string& text);
ColoringCertificate read_certificate(const std::filesystem::path& path);
void write_certificate(const std::filesystem::path& path, const ColoringCertificate& cert);

struct Violation {
  int color = 0;
  std::vector<std::size_t> clique;
};

struct Verdict {
  bool valid = true;
  std::optional<Violation> violation;  // first violating colour
};

/// Re-checks every colour class for a K_t using only the colour array.
/// Throws FormatError for malformed certificates.
Verdict verify_certificate(const ColoringCertificate& cert);

/// Graph of colour class c on n vertices.
Graph color_class(const ColoringCertificate& cert, int c);

struct ConstructionOptions {
  int ell = 2;
  std::size_t t = 3;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_attempts = 1000;
  unsigned threads = 1;
  std::string base_label;  // recorded as base_graph; defaults to graph6 of G
};

struct FailureReport {
  std::uint64_t attempts = 0;
  /// violations_by_color[c - 1] counts attempts whose first violating colour is c.
  std::vector<std::uint64_t> violations_by_color;
  /// Attempts where some colour c <= ell-2 held a K_t (must stay zero).
  std::uint64_t pullback_violations = 0;
};

using ConstructionResult = std::variant<ColoringCertificate, FailureReport>;

/// Random-homomorphism colouring: ell-2 uniform maps f_i : [n] -> V(G); pair
/// {x, y} gets the least i with f_i(x) f_i(y) an edge of G, otherwise colour
/// ell-1 or ell by a fair coin. Attempt a draws from
/// CounterRng(seed).substream(a); the lowest-indexed valid attempt wins.
/// Throws ArgumentError if G contains K_t.
ConstructionResult construct_coloring(const Graph& g, const ConstructionOptions& options);

/// One attempt of the construction, unverified.
ColoringCertificate draw_coloring(const Graph& g, const ConstructionOptions& options,
                                  std::uint64_t attempt);

struct Sizing {
  std::optional<std::uint64_t> n;  // empty when N would exceed 2^63
  double log2_n = 0.0;
};

/// floor(p^{-(ell-2)/t} 2^{(t-1)/2}) for 0 < p <= 1.
Sizing sizing(std::size_t t, int ell, double p_value);

}  // namespace hmr
