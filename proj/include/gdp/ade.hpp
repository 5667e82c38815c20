#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdp/rational.hpp"

namespace gdp {

enum class AdeSeries { A, D, E };

/// A rational double point type: A_n (n >= 1), D_n (n >= 4), E_6/E_7/E_8.
struct AdeType {
  AdeSeries series{AdeSeries::A};
  int rank{1};

  friend auto operator<=>(const AdeType&, const AdeType&) = default;
};

std::string to_string(const AdeType& type);

/// Parses "A4", "D5", "E8". Throws std::invalid_argument on anything else
/// (including out-of-range ranks such as "D3" or "E9").
AdeType parse_ade(std::string_view text);

/// Parses a combined type such as "2A1+A3" into the sorted list
/// {A1, A1, A3}. A bare "A4" yields a single entry.
std::vector<AdeType> parse_singularity_type(std::string_view text);

/// Order of the finite subgroup of SL(2) whose quotient has this
/// singularity: n+1 for A_n, 4(n-2) for D_n, 24/48/120 for E_6/E_7/E_8.
Int group_order(const AdeType& type);

/// Identifies the isomorphism type of a simply-laced Dynkin diagram given as
/// a graph on vertices 0..n-1. Returns nullopt unless the graph is a tree of
/// one of the A/D/E shapes (max degree 3, at most one branch vertex, leg
/// lengths matching the classification).
std::optional<AdeType> classify_dynkin(int vertex_count,
                                       const std::vector<std::pair<int, int>>& edges);

}  // namespace gdp
