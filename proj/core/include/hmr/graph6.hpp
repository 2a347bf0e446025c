#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hmr/graph.hpp"

namespace hmr {

/// Standard graph6 encoding (no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 string. Accepts an optional ">>graph6<<" header and
/// trailing whitespace; throws FormatError on anything else.
Graph from_graph6(std::string_view text);

/// Every non-empty line of a graph6 file.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace hmr
