#include "hmr/coloring.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>

#include "hmr/clique.hpp"
#include "hmr/error.hpp"
#include "hmr/graph6.hpp"
#include "hmr/parallel.hpp"
#include "hmr/rng.hpp"

namespace hmr {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // Row i starts after rows 0..i-1, which hold (n-1) + ... + (n-i) pairs.
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::uint8_t ColoringCertificate::color(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return colors[pair_index(n, i, j)];
}

void ColoringCertificate::set_color(std::size_t i, std::size_t j, std::uint8_t c) {
  if (i > j) std::swap(i, j);
  colors[pair_index(n, i, j)] = c;
}

namespace {

constexpr std::string_view kMagic = "hmr-coloring-certificate 1";

void check_well_formed(const ColoringCertificate& cert) {
  if (cert.ell < 1 || cert.ell > 255) throw FormatError("ell must lie in 1..255");
  if (cert.t < 1) throw FormatError("t must be positive");
  const std::size_t pairs = cert.n * (cert.n - (cert.n > 0 ? 1 : 0)) / 2;
  if (cert.colors.size() != pairs) {
    throw FormatError("colour array has " + std::to_string(cert.colors.size()) +
                      " entries, expected n(n-1)/2 = " + std::to_string(pairs));
  }
  for (std::size_t i = 0; i < cert.colors.size(); ++i) {
    if (cert.colors[i] < 1 || cert.colors[i] > cert.ell) {
      throw FormatError("colour " + std::to_string(cert.colors[i]) + " at position " +
                        std::to_string(i) + " outside 1.." + std::to_string(cert.ell));
    }
  }
}

std::uint64_t parse_u64(const std::string& field, const std::string& what) {
  if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("certificate field '" + what + "' is not a nonnegative integer: '" +
                      field + "'");
  }
  try {
    return std::stoull(field);
  } catch (const std::exception&) {
    throw FormatError("certificate field '" + what + "' out of range");
  }
}

}  // namespace

std::string to_text(const ColoringCertificate& cert) {
  std::string out;
  out += kMagic;
  out += "\nn " + std::to_string(cert.n);
  out += "\nell " + std::to_string(cert.ell);
  out += "\nt " + std::to_string(cert.t);
  out += "\nbase_graph " + cert.base_graph;
  out += "\nseed " + std::to_string(cert.seed);
  out += "\nattempts_used " + std::to_string(cert.attempts_used);
  out += "\ncolors ";
  for (std::size_t i = 0; i < cert.colors.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(cert.colors[i]);
  }
  out += '\n';
  return out;
}

ColoringCertificate certificate_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw FormatError("missing certificate header '" + std::string(kMagic) + "'");
  }
  auto field = [&](const std::string& key) {
    if (!std::getline(in, line)) throw FormatError("certificate truncated before '" + key + "'");
    if (!line.starts_with(key + " ")) {
      throw FormatError("expected certificate field '" + key + "', got '" + line.substr(0, 32) + "'");
    }
    return line.substr(key.size() + 1);
  };
  ColoringCertificate cert;
  cert.n = parse_u64(field("n"), "n");
  const auto ell = parse_u64(field("ell"), "ell");
  if (ell > 255) throw FormatError("ell must lie in 1..255");
  cert.ell = static_cast<int>(ell);
  cert.t = parse_u64(field("t"), "t");
  cert.base_graph = field("base_graph");
  cert.seed = parse_u64(field("seed"), "seed");
  cert.attempts_used = parse_u64(field("attempts_used"), "attempts_used");
  const std::string list = field("colors");
  if (!list.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = list.find(',', start);
      const auto token = list.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
      const auto c = parse_u64(token, "colors");
      if (c > 255) throw FormatError("colour value above 255");
      cert.colors.push_back(static_cast<std::uint8_t>(c));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw FormatError("unexpected trailing content in certificate");
  }
  check_well_formed(cert);
  return cert;
}

ColoringCertificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open certificate " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return certificate_from_text(buf.str());
}

void write_certificate(const std::filesystem::path& path, const ColoringCertificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << to_text(cert);
}

Graph color_class(const ColoringCertificate& cert, int c) {
  Graph g(cert.n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < cert.n; ++i)
    for (std::size_t j = i + 1; j < cert.n; ++j, ++idx)
      if (cert.colors[idx] == c) g.add_edge(i, j);
  return g;
}

Verdict verify_certificate(const ColoringCertificate& cert) {
  check_well_formed(cert);
  for (int c = 1; c <= cert.ell; ++c) {
    if (auto clique = find_clique(color_class(cert, c), cert.t)) {
      return Verdict{false, Violation{c, std::move(*clique)}};
    }
  }
  return Verdict{true, std::nullopt};
}

ColoringCertificate draw_coloring(const Graph& g, const ConstructionOptions& options,
                                  std::uint64_t attempt) {
  CounterRng rng = CounterRng(options.seed).substream(attempt);
  const std::size_t n = options.n;
  const auto maps_count = static_cast<std::size_t>(options.ell - 2);
  std::vector<std::size_t> maps(maps_count * n);
  for (auto& image : maps) image = rng.next_below(g.size());

  ColoringCertificate cert;
  cert.n = n;
  cert.ell = options.ell;
  cert.t = options.t;
  cert.base_graph = options.base_label.empty() ? to_graph6(g) : options.base_label;
  cert.seed = options.seed;
  cert.attempts_used = attempt + 1;
  cert.colors.resize(n * (n - (n > 0 ? 1 : 0)) / 2);
  std::size_t idx = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y, ++idx) {
      std::uint8_t c = 0;
      for (std::size_t i = 0; i < maps_count; ++i) {
        const std::size_t fx = maps[i * n + x];
        const std::size_t fy = maps[i * n + y];
        if (fx != fy && g.adjacent(fx, fy)) {
          c = static_cast<std::uint8_t>(i + 1);
          break;
        }
      }
      if (c == 0) c = static_cast<std::uint8_t>(options.ell - 1 + (rng.next() & 1U));
      cert.colors[idx] = c;
    }
  }
  return cert;
}

ConstructionResult construct_coloring(const Graph& g, const ConstructionOptions& options) {
  if (options.ell < 2 || options.ell > 255) throw ArgumentError("ell must lie in 2..255");
  if (options.t <= 2) throw ArgumentError("t must exceed 2");
  if (options.n < options.t) throw ArgumentError("n must be at least t");
  if (options.max_attempts == 0) throw ArgumentError("max_attempts must be positive");
  if (options.ell > 2 && g.size() == 0) throw ArgumentError("base graph has no vertices");
  if (has_clique(g, options.t)) {
    throw ArgumentError("base graph contains K_" + std::to_string(options.t) +
                        "; its pullback colour classes would not be K_t-free");
  }

  FailureReport report;
  report.violations_by_color.assign(static_cast<std::size_t>(options.ell), 0);
  const unsigned threads = resolve_threads(options.threads);
  const std::uint64_t batch = std::max<std::uint64_t>(1, threads);

  for (std::uint64_t first = 0; first < options.max_attempts; first += batch) {
    const std::uint64_t count = std::min(batch, options.max_attempts - first);
    std::vector<std::optional<ColoringCertificate>> winners(count);
    std::vector<Verdict> verdicts(count);
    parallel_chunks(count, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
      for (std::uint64_t k = begin; k < end; ++k) {
        auto cert = draw_coloring(g, options, first + k);
        verdicts[k] = verify_certificate(cert);
        if (verdicts[k].valid) winners[k] = std::move(cert);
      }
    });
    for (std::uint64_t k = 0; k < count; ++k) {
      if (winners[k]) return std::move(*winners[k]);
      ++report.attempts;
      const int c = verdicts[k].violation->color;
      ++report.violations_by_color[static_cast<std::size_t>(c - 1)];
      if (c <= options.ell - 2) ++report.pullback_violations;
    }
  }
  return report;
}

Sizing sizing(std::size_t t, int ell, double p_value) {
  if (!(p_value > 0.0 && p_value <= 1.0)) throw ArgumentError("probability must lie in (0,1]");
  if (ell < 2) throw ArgumentError("ell must be at least 2");
  if (t < 1) throw ArgumentError("t must be positive");
  Sizing out;
  out.log2_n = -static_cast<double>(ell - 2) / static_cast<double>(t) * std::log2(p_value) +
               (static_cast<double>(t) - 1.0) / 2.0;
  if (out.log2_n >= 63.0) return out;
  const double x = std::exp2(out.log2_n);
  // An exact integer can come out a few ulps low (e.g. 2^{k} via exp2 of a
  // rounded logarithm); snap to it instead of flooring to its predecessor.
  const double nearest = std::nearbyint(x);
  const double guard = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x);
  out.n = static_cast<std::uint64_t>(std::abs(x - nearest) <= guard ? nearest : std::floor(x));
  return out;
}

}  // namespace hmr
