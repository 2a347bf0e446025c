#include "hmr/graph6.hpp"

#include <fstream>

#include "hmr/error.hpp"

namespace hmr {
namespace {

constexpr char kBias = 63;

void encode_size(std::size_t n, std::string& out) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  }
}

int sextet(char c) {
  if (c < 63 || c > 126) throw FormatError(std::string("invalid graph6 character '") + c + "'");
  return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  encode_size(n, out);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw FormatError("truncated graph6 size field");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6U) | static_cast<std::size_t>(sextet(text[k]));
    pos = 8;
  } else {
    if (text.size() < 4) throw FormatError("truncated graph6 size field");
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6U) | static_cast<std::size_t>(sextet(text[k]));
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw FormatError("graph6 body has " + std::to_string(text.size() - pos) +
                      " characters, expected " + std::to_string(expected) + " for n=" +
                      std::to_string(n));
  }
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int word = sextet(text[pos + bit / 6]);
      if ((word >> (5 - static_cast<int>(bit % 6))) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw FormatError("nonzero graph6 padding");
  }
  return g;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph6 file: " + path.string());
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \r\n") == std::string::npos) continue;
    graphs.push_back(from_graph6(line));
  }
  if (graphs.empty()) throw FormatError("no graphs in " + path.string());
  return graphs;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace hmr
