#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "gdp/ade.hpp"
#include "gdp/linalg.hpp"

namespace gdp {

/// One curve on the minimal resolution: a (-1)-curve or a (-2)-curve.
struct Curve {
  int id{0};
  int self{-1};

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// One rational double point, given by its type and the (-2)-curves over it.
struct SingularPoint {
  AdeType type;
  std::vector<int> curve_ids;

  Int group_order() const { return gdp::group_order(type); }
  int num_components() const { return static_cast<int>(curve_ids.size()); }

  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

using MetaValue = std::variant<bool, std::int64_t, std::string>;
using Metadata = std::map<std::string, MetaValue>;

/// A surface described through its minimal resolution: the (-1)/(-2)-curve
/// configuration, the intersection matrix, the singular-point grouping, and
/// the degree (-K)^2. Entries whose curve data is not yet encoded keep an
/// empty curve list and carry descriptive metadata only.
struct SurfaceModel {
  std::string name;
  int degree{0};
  std::vector<Curve> curves;
  IMatrix intersections;  // by curve position; diagonal = self-intersections
  std::vector<SingularPoint> singular_points;
  Metadata metadata;
  std::optional<std::vector<std::array<std::int64_t, 2>>> fan;

  bool curves_encoded() const { return !curves.empty(); }

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b);
};

/// Index of the curve with the given id in model.curves; throws
/// std::out_of_range if absent.
Eigen::Index position_of(const SurfaceModel& model, int curve_id);

std::vector<Eigen::Index> minus_one_positions(const SurfaceModel& model);
std::vector<Eigen::Index> minus_two_positions(const SurfaceModel& model);
std::vector<int> minus_one_ids(const SurfaceModel& model);

/// True when ampleness certification applies: at least one (-1)-curve and at
/// least one (-2)-curve are encoded. Smooth models and models with no
/// (-1)-curves (plane / ruled-surface shapes) are excluded.
bool positivity_supported(const SurfaceModel& model);

struct ValidationReport {
  std::vector<std::string> violations;
  bool unsupported_for_positivity{false};

  bool ok() const { return violations.empty(); }
};

/// Structural validation: matrix shape and symmetry, self-intersections,
/// the partition of (-2)-curves into singular points, per-point Dynkin shape
/// against the declared type, negative definiteness of the exceptional
/// matrix, and metadata consistency. Never throws on malformed data; every
/// problem becomes a violation message.
ValidationReport validate(const SurfaceModel& model);

/// Convenience constructor from an off-diagonal pair list (by curve id).
SurfaceModel make_model(std::string name, int degree, std::vector<Curve> curves,
                        const std::vector<std::tuple<int, int, std::int64_t>>& pairs,
                        std::vector<SingularPoint> singular_points,
                        Metadata metadata = {});

}  // namespace gdp
