#pragma once

#include <cstdint>
#include <vector>

#include "gdp/invariants.hpp"

namespace gdp {

/// Contribution of one singular point to an Euler-characteristic evaluation.
struct PointTerms {
  std::size_t point_index{0};
  Rational a_O;
  Rational a_omega;
  Rational c2_local;
  bool cartier{false};
};

/// Full intermediate record of one Riemann-Roch evaluation.
struct ChiBreakdown {
  WeilClass divisor;
  QDivisor lift;       // pi*D
  Rational self_int;   // D^2 (via the resolution form on pi*D)
  Rational k_dot;      // K.D
  Rational c2_global;  // c2 of the twisted differentials
  std::vector<PointTerms> a_terms;
  Rational chi_omega;      // chi of reflexive differentials twisted by D
  Rational chi_structure;  // chi of O(D)
};

/// chi of the twisted reflexive differentials:
/// 2 + (K + 2D).D - c2_global + sum of a_omega over the singular points;
/// chi_structure = 1 + (1/2) D.(D - K) + sum of a_O comes along for free.
ChiBreakdown chi_omega1(const SurfaceModel& model, const WeilClass& divisor);

/// Same computation with the strict transform and pullback already in hand
/// (the search loop builds both incrementally).
ChiBreakdown chi_from_pullback(const SurfaceModel& model, const WeilClass& divisor,
                               const QDivisor& tilde, const QDivisor& pulled);

/// chi(O(D)) = 1 + (1/2) D.(D - K) + sum of a(x, O(D)).
Rational chi_rank1(const SurfaceModel& model, const WeilClass& divisor);

/// Arithmetic criterion for Bott vanishing with Cartier twists: holds iff
/// h0 of the tangent sheaf of the resolution equals 10 - n - 2*rho.
bool baker_cartier_bv(std::int64_t h0_tangent, std::int64_t n_minus2_curves,
                      std::int64_t rho);

}  // namespace gdp
