#include "gdp/surface_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdp {

bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
  if (a.name != b.name || a.degree != b.degree || a.curves != b.curves ||
      a.singular_points != b.singular_points || a.metadata != b.metadata ||
      a.fan != b.fan) {
    return false;
  }
  if (a.intersections.rows() != b.intersections.rows() ||
      a.intersections.cols() != b.intersections.cols()) {
    return false;
  }
  return a.intersections == b.intersections;
}

Eigen::Index position_of(const SurfaceModel& model, int curve_id) {
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    if (model.curves[i].id == curve_id) return static_cast<Eigen::Index>(i);
  }
  throw std::out_of_range("no curve with id " + std::to_string(curve_id) + " in " +
                          model.name);
}

namespace {

std::vector<Eigen::Index> positions_with_self(const SurfaceModel& model, int self) {
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    if (model.curves[i].self == self) out.push_back(static_cast<Eigen::Index>(i));
  }
  return out;
}

}  // namespace

std::vector<Eigen::Index> minus_one_positions(const SurfaceModel& model) {
  return positions_with_self(model, -1);
}

std::vector<Eigen::Index> minus_two_positions(const SurfaceModel& model) {
  return positions_with_self(model, -2);
}

std::vector<int> minus_one_ids(const SurfaceModel& model) {
  std::vector<int> out;
  for (const Curve& c : model.curves) {
    if (c.self == -1) out.push_back(c.id);
  }
  return out;
}

bool positivity_supported(const SurfaceModel& model) {
  return !minus_one_positions(model).empty() && !minus_two_positions(model).empty();
}

namespace {

class ReportBuilder {
public:
  template <class... Parts>
  void add(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    report_.violations.push_back(os.str());
  }

  ValidationReport take() { return std::move(report_); }

private:
  ValidationReport report_;
};

std::string meta_string(const MetaValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<bool>(v) ? "true" : "false";
}

}  // namespace

ValidationReport validate(const SurfaceModel& model) {
  ReportBuilder out;
  const auto n_curves = static_cast<Eigen::Index>(model.curves.size());

  if (model.degree < 1 || model.degree > 9)
    out.add("degree ", model.degree, " out of range [1, 9]");

  std::set<int> ids;
  for (const Curve& c : model.curves) {
    if (c.id < 0) out.add("curve id ", c.id, " is negative");
    if (!ids.insert(c.id).second) out.add("curve id ", c.id, " duplicated");
    if (c.self != -1 && c.self != -2)
      out.add("curve ", c.id, " has self-intersection ", c.self, " (must be -1 or -2)");
  }

  const bool matrix_shape_ok =
      model.intersections.rows() == n_curves && model.intersections.cols() == n_curves;
  if (!matrix_shape_ok) {
    out.add("intersection matrix is ", model.intersections.rows(), "x",
            model.intersections.cols(), " but there are ", n_curves, " curves");
    auto report = out.take();
    report.unsupported_for_positivity = !positivity_supported(model);
    return report;
  }

  for (Eigen::Index i = 0; i < n_curves; ++i) {
    if (model.intersections(i, i) != model.curves[static_cast<std::size_t>(i)].self)
      out.add("diagonal entry for curve ", model.curves[static_cast<std::size_t>(i)].id,
              " disagrees with its self-intersection");
    for (Eigen::Index j = i + 1; j < n_curves; ++j) {
      if (model.intersections(i, j) != model.intersections(j, i))
        out.add("intersection matrix not symmetric at (", i, ",", j, ")");
      if (model.intersections(i, j) < 0)
        out.add("negative off-diagonal intersection at (", i, ",", j, ")");
    }
  }

  // Partition of the (-2)-curves into singular points.
  std::map<int, int> owner;  // curve id -> singular point index
  for (std::size_t p = 0; p < model.singular_points.size(); ++p) {
    const SingularPoint& point = model.singular_points[p];
    if (point.curve_ids.empty()) out.add("singular point ", p, " has no curves");
    for (int id : point.curve_ids) {
      if (!ids.count(id)) {
        out.add("singular point ", p, " references unknown curve id ", id);
        continue;
      }
      if (model.curves[static_cast<std::size_t>(position_of(model, id))].self == -1)
        out.add("(-1)-curve ", id, " listed in singular point ", p);
      auto [it, inserted] = owner.emplace(id, static_cast<int>(p));
      if (!inserted) out.add("curve ", id, " assigned to multiple singular points");
    }
  }
  for (const Curve& c : model.curves) {
    if (c.self == -2 && !owner.count(c.id))
      out.add("(-2)-curve ", c.id, " belongs to no singular point");
  }

  // Per-point Dynkin shape, against the declared type. Multiple edges are
  // never Dynkin, so any off-diagonal entry >= 2 inside a point fails too.
  for (std::size_t p = 0; p < model.singular_points.size(); ++p) {
    const SingularPoint& point = model.singular_points[p];
    bool resolvable = true;
    for (int id : point.curve_ids) resolvable = resolvable && ids.count(id) > 0;
    if (!resolvable) continue;
    std::vector<std::pair<int, int>> edges;
    bool simple = true;
    for (std::size_t a = 0; a < point.curve_ids.size(); ++a) {
      for (std::size_t b = a + 1; b < point.curve_ids.size(); ++b) {
        const auto mult = model.intersections(position_of(model, point.curve_ids[a]),
                                              position_of(model, point.curve_ids[b]));
        if (mult >= 2) simple = false;
        if (mult >= 1) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
    const auto shape =
        simple ? classify_dynkin(static_cast<int>(point.curve_ids.size()), edges)
               : std::nullopt;
    if (!shape) {
      out.add("singular point ", p, " not ADE-shaped");
    } else if (*shape != point.type) {
      out.add("singular point ", p, " has shape ", to_string(*shape),
              " but is declared ", to_string(point.type));
    }
  }

  // Exceptional curves over distinct points never meet.
  for (const auto& [id_a, point_a] : owner) {
    for (const auto& [id_b, point_b] : owner) {
      if (id_a < id_b && point_a != point_b &&
          model.intersections(position_of(model, id_a), position_of(model, id_b)) != 0)
        out.add("(-2)-curves ", id_a, " and ", id_b,
                " lie over different singular points but intersect");
    }
  }

  // Negative definiteness of the full exceptional intersection matrix,
  // by exact leading-principal-minor signs.
  const auto exceptional = minus_two_positions(model);
  if (!exceptional.empty()) {
    RMatrix m(static_cast<Eigen::Index>(exceptional.size()),
              static_cast<Eigen::Index>(exceptional.size()));
    for (std::size_t a = 0; a < exceptional.size(); ++a) {
      for (std::size_t b = 0; b < exceptional.size(); ++b) {
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            Rational(model.intersections(exceptional[a], exceptional[b]));
      }
    }
    if (!is_negative_definite(m))
      out.add("exceptional intersection matrix is not negative definite");
  }

  const auto n_exceptional = static_cast<int>(exceptional.size());
  if (auto it = model.metadata.find("picard_rank"); it != model.metadata.end()) {
    const auto* rank = std::get_if<std::int64_t>(&it->second);
    if (!rank) {
      out.add("metadata picard_rank is not an integer");
    } else if (*rank != 10 - model.degree - n_exceptional) {
      out.add("metadata picard_rank ", *rank, " inconsistent with 10 - degree - n = ",
              10 - model.degree - n_exceptional, " (n = ", n_exceptional, " (-2)-curves)");
    }
  }

  if (auto it = model.metadata.find("singularity_type");
      it != model.metadata.end() && model.curves_encoded()) {
    std::vector<AdeType> declared;
    for (const SingularPoint& point : model.singular_points) declared.push_back(point.type);
    std::sort(declared.begin(), declared.end());
    bool matches = false;
    try {
      matches = parse_singularity_type(meta_string(it->second)) == declared;
    } catch (const std::invalid_argument&) {
      matches = false;
    }
    if (!matches)
      out.add("metadata singularity_type '", meta_string(it->second),
              "' does not match the singular points");
  }

  auto report = out.take();
  report.unsupported_for_positivity = !positivity_supported(model);
  return report;
}

SurfaceModel make_model(std::string name, int degree, std::vector<Curve> curves,
                        const std::vector<std::tuple<int, int, std::int64_t>>& pairs,
                        std::vector<SingularPoint> singular_points, Metadata metadata) {
  SurfaceModel model;
  model.name = std::move(name);
  model.degree = degree;
  model.curves = std::move(curves);
  model.singular_points = std::move(singular_points);
  model.metadata = std::move(metadata);
  const auto n = static_cast<Eigen::Index>(model.curves.size());
  model.intersections = IMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    model.intersections(i, i) = model.curves[static_cast<std::size_t>(i)].self;
  for (const auto& [id_a, id_b, mult] : pairs) {
    const auto a = position_of(model, id_a);
    const auto b = position_of(model, id_b);
    model.intersections(a, b) = mult;
    model.intersections(b, a) = mult;
  }
  return model;
}

}  // namespace gdp
