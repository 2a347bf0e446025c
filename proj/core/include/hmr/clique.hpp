#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hmr/graph.hpp"

namespace hmr {

/// Vertices of a t-clique, if one exists. Only validity of the witness is
/// guaranteed, not which clique is returned.
std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t t);

inline bool has_clique(const Graph& g, std::size_t t) { return find_clique(g, t).has_value(); }

/// A maximum clique (empty for the empty graph).
std::vector<std::size_t> maximum_clique(const Graph& g);

inline std::size_t max_clique_size(const Graph& g) { return maximum_clique(g).size(); }

/// True iff the vertices are distinct, in range and pairwise adjacent.
bool is_clique(const Graph& g, std::span<const std::size_t> vertices);

}  // namespace hmr
