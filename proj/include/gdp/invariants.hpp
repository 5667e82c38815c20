#pragma once

#include "gdp/intersection.hpp"
#include "gdp/surface_model.hpp"

namespace gdp {

/// Everything Riemann-Roch needs from one singular point for one divisor.
struct LocalInvariants {
  Rational a_O;        // a(x, O(D))
  Rational a_omega;    // a(x, twisted reflexive differentials)
  Rational c2_local;   // c2(x, twisted differentials)
  int k_summands{0};   // 1 iff D is Cartier at x
  QDivisor frac_part;  // F = floor(pi*D) - pi*D, restricted to x's curves
};

/// Componentwise floor of all coefficients.
QDivisor floor_divisor(const QDivisor& divisor);

/// True when the exceptional coefficients of pi*D over x are all integers,
/// i.e. the divisor is Cartier at x.
bool is_cartier_at(const SurfaceModel& model, const SingularPoint& x,
                   const WeilClass& divisor);

/// a(x, O(D)) = (1/2) F . (floor(pi*D) - K), with F as in LocalInvariants
/// and the K-pairing taken through adjunction. Zero whenever D is Cartier
/// at x.
Rational a_rank1(const SurfaceModel& model, const SingularPoint& x,
                 const WeilClass& divisor);

/// a(x, Omega(D)) = 2 a(x, O(D)) + 1/|G| - k. The doubling uses that the
/// resolution is crepant and K is Cartier, so twisting by the canonical
/// class does not change the rank-1 a-invariant; k = 1 iff D is Cartier
/// at x.
Rational a_omega(const SurfaceModel& model, const SingularPoint& x,
                 const WeilClass& divisor);

/// c2(x, Omega(D-tilde)) = (1 + #components - 1/|G|) + c1(x, D-tilde)^2.
Rational c2_local_omega(const SurfaceModel& model, const SingularPoint& x,
                        const WeilClass& divisor);

/// c2 of the twisted differentials on the singular surface:
/// (12 - degree) + K.D-tilde + D-tilde^2 - sum over x of the local c2.
Rational c2_global_omega(const SurfaceModel& model, const WeilClass& divisor);

/// All local terms at once; the *_from variant reuses an already computed
/// pullback (the search loop calls it per candidate).
LocalInvariants local_invariants(const SurfaceModel& model, const SingularPoint& x,
                                 const WeilClass& divisor);
LocalInvariants local_invariants_from(const SurfaceModel& model, const SingularPoint& x,
                                      const QDivisor& pulled);
Rational c2_global_omega_from(const SurfaceModel& model, const QDivisor& tilde,
                              const QDivisor& pulled);

}  // namespace gdp
