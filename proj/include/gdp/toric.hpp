#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdp {

using RayVec = std::array<std::int64_t, 2>;

struct FanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A complete 2D fan: primitive rays in counterclockwise order, consecutive
/// pairs positively oriented. Construct through make_fan, which sorts and
/// validates.
struct Fan2D {
  std::vector<RayVec> rays;
};

/// Sorts the rays counterclockwise (exact integer comparator, starting at
/// the positive x-axis) and validates: at least three rays, all primitive,
/// no duplicates, every consecutive pair (cyclically) spanning a strictly
/// convex cone. Throws FanError otherwise.
Fan2D make_fan(std::vector<RayVec> rays);

/// One 2D cone of the fan and the type of its torus-fixed point. `order` is
/// |det(u, v)|, the index of the sublattice the rays generate; the cone is
/// smooth iff order = 1 and Gorenstein iff some integer linear functional
/// takes value 1 on both rays, in which case the point is an A_{order-1}
/// singularity.
struct ConeSingularity {
  RayVec u{};
  RayVec v{};
  std::int64_t order{1};
  bool gorenstein{true};

  std::string label() const;
};

/// One entry per 2D cone (consecutive ray pair, cyclically).
std::vector<ConeSingularity> classify_fan(const Fan2D& fan);

/// Sorted ADE labels of the fan's singular points, e.g. {"A1","A1","A3"}.
/// Throws FanError if any cone is non-Gorenstein.
std::vector<std::string> singularity_multiset(const Fan2D& fan);

}  // namespace gdp
