#pragma once

#include <cstdint>
#include <map>

#include "gdp/linalg.hpp"
#include "gdp/surface_model.hpp"

namespace gdp {

/// A Weil divisor class on the singular surface, written as an integer
/// combination of pushed-forward (-1)-curves: D = sum a_i pi_*(C_i).
struct WeilClass {
  std::map<int, std::int64_t> coefficients;  // keyed by (-1)-curve id

  static WeilClass from_coefficients(const SurfaceModel& model,
                                     const std::vector<std::int64_t>& values);

  friend bool operator==(const WeilClass&, const WeilClass&) = default;
};

/// A Q-divisor on the resolution, stored positionally over model.curves.
struct QDivisor {
  RVector coefficients;

  static QDivisor zero(const SurfaceModel& model) {
    return QDivisor{RVector::Zero(static_cast<Eigen::Index>(model.curves.size()))};
  }

  const Rational& coeff(const SurfaceModel& model, int curve_id) const {
    return coefficients(position_of(model, curve_id));
  }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coefficients.rows(); ++i) {
      if (!coefficients(i).is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const QDivisor& a, const QDivisor& b) {
    return a.coefficients.rows() == b.coefficients.rows() &&
           a.coefficients == b.coefficients;
  }
};

/// The strict transform D-tilde = sum a_i C_i: the class coefficients placed
/// on the (-1)-curves, zero elsewhere.
QDivisor tilde_divisor(const SurfaceModel& model, const WeilClass& divisor);

/// Numerical pullback pi*D: the unique Q-divisor D-tilde + sum t_j E_j with
/// (pi*D).E_j = 0 for every (-2)-curve E_j. The exceptional block is
/// negative definite, so the linear system has exactly one (exact) solution.
QDivisor pullback(const SurfaceModel& model, const WeilClass& divisor);

/// Restriction to the (-2)-curves (the part supported on the exceptional
/// locus); coefficients on (-1)-curves are zeroed.
QDivisor exceptional_part(const SurfaceModel& model, const QDivisor& divisor);

/// Local first Chern class at x: c1(x, D-tilde) = -(exceptional part of
/// pi*D over x). Summing over all x recovers D-tilde - pi*D.
QDivisor local_c1(const SurfaceModel& model, const SingularPoint& x,
                  const WeilClass& divisor);

/// The intersection form of the resolution: sum_ij A_i B_j (C_i . C_j).
Rational product_resolution(const SurfaceModel& model, const QDivisor& a,
                            const QDivisor& b);

/// Intersection number on the singular surface: pullbacks are intersected on
/// the resolution.
Rational mumford_product(const SurfaceModel& model, const WeilClass& a,
                         const WeilClass& b);

/// K_X . D through adjunction: each curve pairs with K as -2 - C^2, so only
/// the (-1)-coefficients contribute and K.D = -sum a_i.
Rational k_product(const SurfaceModel& model, const WeilClass& divisor);

/// K-pairing of an arbitrary resolution divisor: sum_i A_i (-2 - C_i^2).
Rational k_dot_resolution(const SurfaceModel& model, const QDivisor& divisor);

}  // namespace gdp
