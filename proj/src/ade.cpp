#include "gdp/ade.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdp {

std::string to_string(const AdeType& type) {
  const char letter = type.series == AdeSeries::A   ? 'A'
                      : type.series == AdeSeries::D ? 'D'
                                                    : 'E';
  return letter + std::to_string(type.rank);
}

namespace {

[[noreturn]] void bad_type(std::string_view text) {
  throw std::invalid_argument("not an ADE type: '" + std::string(text) + "'");
}

}  // namespace

AdeType parse_ade(std::string_view text) {
  if (text.size() < 2) bad_type(text);
  AdeSeries series;
  switch (text[0]) {
    case 'A': series = AdeSeries::A; break;
    case 'D': series = AdeSeries::D; break;
    case 'E': series = AdeSeries::E; break;
    default: bad_type(text);
  }
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') bad_type(text);
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) bad_type(text);
  }
  if (series == AdeSeries::A && rank < 1) bad_type(text);
  if (series == AdeSeries::D && rank < 4) bad_type(text);
  if (series == AdeSeries::E && (rank < 6 || rank > 8)) bad_type(text);
  return AdeType{series, rank};
}

std::vector<AdeType> parse_singularity_type(std::string_view text) {
  std::vector<AdeType> types;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    if (part.empty()) throw std::invalid_argument("empty summand in singularity type");
    int multiplicity = 0;
    std::size_t i = 0;
    while (i < part.size() && part[i] >= '0' && part[i] <= '9') {
      multiplicity = multiplicity * 10 + (part[i] - '0');
      ++i;
    }
    if (i == 0) multiplicity = 1;
    if (multiplicity < 1 || multiplicity > 64)
      throw std::invalid_argument("bad multiplicity in singularity type");
    const AdeType type = parse_ade(part.substr(i));
    for (int k = 0; k < multiplicity; ++k) types.push_back(type);
    if (end == text.size()) break;
    start = end + 1;
  }
  std::sort(types.begin(), types.end());
  return types;
}

Int group_order(const AdeType& type) {
  switch (type.series) {
    case AdeSeries::A: return Int(type.rank + 1);
    case AdeSeries::D: return Int(4) * (type.rank - 2);
    case AdeSeries::E:
      if (type.rank == 6) return Int(24);
      if (type.rank == 7) return Int(48);
      return Int(120);
  }
  throw std::logic_error("group_order: unreachable");
}

std::optional<AdeType> classify_dynkin(int vertex_count,
                                       const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 1) return std::nullopt;
  const int n = vertex_count;
  // A tree on n vertices has exactly n-1 edges; anything else is out.
  if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) return std::nullopt;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  // Connectivity check; together with the edge count this certifies a tree.
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  if (visited != n) return std::nullopt;

  int branch = -1;
  for (int v = 0; v < n; ++v) {
    const auto degree = adj[static_cast<std::size_t>(v)].size();
    if (degree > 3) return std::nullopt;
    if (degree == 3) {
      if (branch >= 0) return std::nullopt;  // two branch points never occur in ADE
      branch = v;
    }
  }

  if (branch < 0) return AdeType{AdeSeries::A, n};

  // Walk each of the three legs away from the branch vertex, counting the
  // vertices on it (the branch vertex itself excluded).
  std::vector<int> legs;
  for (int start : adj[static_cast<std::size_t>(branch)]) {
    int length = 0;
    int prev = branch;
    int cur = start;
    while (true) {
      ++length;
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    legs.push_back(length);
  }
  std::sort(legs.begin(), legs.end());

  if (legs[0] == 1 && legs[1] == 1) return AdeType{AdeSeries::D, n};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
    return AdeType{AdeSeries::E, n};
  return std::nullopt;
}

}  // namespace gdp
