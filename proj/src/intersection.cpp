#include "gdp/intersection.hpp"

#include <stdexcept>

namespace gdp {

WeilClass WeilClass::from_coefficients(const SurfaceModel& model,
                                       const std::vector<std::int64_t>& values) {
  const auto ids = minus_one_ids(model);
  if (values.size() != ids.size())
    throw std::invalid_argument("expected " + std::to_string(ids.size()) +
                                " coefficients for " + model.name + ", got " +
                                std::to_string(values.size()));
  WeilClass divisor;
  for (std::size_t i = 0; i < ids.size(); ++i) divisor.coefficients[ids[i]] = values[i];
  return divisor;
}

QDivisor tilde_divisor(const SurfaceModel& model, const WeilClass& divisor) {
  QDivisor out = QDivisor::zero(model);
  for (const auto& [id, value] : divisor.coefficients) {
    const auto pos = position_of(model, id);
    if (model.curves[static_cast<std::size_t>(pos)].self != -1)
      throw std::invalid_argument("divisor coefficient on non-(-1)-curve id " +
                                  std::to_string(id));
    out.coefficients(pos) = Rational(value);
  }
  return out;
}

QDivisor pullback(const SurfaceModel& model, const WeilClass& divisor) {
  const QDivisor tilde = tilde_divisor(model, divisor);
  const auto exceptional = minus_two_positions(model);
  const auto m = static_cast<Eigen::Index>(exceptional.size());
  QDivisor out = tilde;
  if (m == 0) return out;

  // Solve N t = -b where N is the exceptional intersection block and
  // b_j = D-tilde . E_j, so that (D-tilde + sum t_j E_j) . E_j = 0.
  RMatrix n(m, m);
  RVector b = RVector::Zero(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k)
      n(j, k) = Rational(model.intersections(exceptional[static_cast<std::size_t>(j)],
                                             exceptional[static_cast<std::size_t>(k)]));
    for (Eigen::Index i = 0; i < tilde.coefficients.rows(); ++i) {
      if (!tilde.coefficients(i).is_zero())
        b(j) += tilde.coefficients(i) *
                Rational(model.intersections(i, exceptional[static_cast<std::size_t>(j)]));
    }
  }
  const RVector t = solve_linear(n, RVector(-b));
  for (Eigen::Index j = 0; j < m; ++j)
    out.coefficients(exceptional[static_cast<std::size_t>(j)]) = t(j);
  return out;
}

QDivisor exceptional_part(const SurfaceModel& model, const QDivisor& divisor) {
  QDivisor out = QDivisor::zero(model);
  for (const auto pos : minus_two_positions(model))
    out.coefficients(pos) = divisor.coefficients(pos);
  return out;
}

QDivisor local_c1(const SurfaceModel& model, const SingularPoint& x,
                  const WeilClass& divisor) {
  const QDivisor lifted = pullback(model, divisor);
  QDivisor out = QDivisor::zero(model);
  for (int id : x.curve_ids) {
    const auto pos = position_of(model, id);
    out.coefficients(pos) = -lifted.coefficients(pos);
  }
  return out;
}

Rational product_resolution(const SurfaceModel& model, const QDivisor& a,
                            const QDivisor& b) {
  const auto n = static_cast<Eigen::Index>(model.curves.size());
  if (a.coefficients.rows() != n || b.coefficients.rows() != n)
    throw std::invalid_argument("divisor not bound to " + model.name);
  Rational out(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a.coefficients(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (b.coefficients(j).is_zero()) continue;
      out += a.coefficients(i) * b.coefficients(j) * Rational(model.intersections(i, j));
    }
  }
  return out;
}

Rational mumford_product(const SurfaceModel& model, const WeilClass& a,
                         const WeilClass& b) {
  return product_resolution(model, pullback(model, a), pullback(model, b));
}

Rational k_product(const SurfaceModel& model, const WeilClass& divisor) {
  Rational out(0);
  for (const auto& [id, value] : divisor.coefficients) {
    const auto& curve = model.curves[static_cast<std::size_t>(position_of(model, id))];
    out += Rational(value) * Rational(-2 - curve.self);
  }
  return out;
}

Rational k_dot_resolution(const SurfaceModel& model, const QDivisor& divisor) {
  const auto n = static_cast<Eigen::Index>(model.curves.size());
  if (divisor.coefficients.rows() != n)
    throw std::invalid_argument("divisor not bound to " + model.name);
  Rational out(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    out += divisor.coefficients(i) *
           Rational(-2 - model.curves[static_cast<std::size_t>(i)].self);
  }
  return out;
}

}  // namespace gdp
