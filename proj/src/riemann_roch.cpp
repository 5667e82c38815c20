#include "gdp/riemann_roch.hpp"

#include <stdexcept>

namespace gdp {

ChiBreakdown chi_from_pullback(const SurfaceModel& model, const WeilClass& divisor,
                               const QDivisor& tilde, const QDivisor& pulled) {
  ChiBreakdown out;
  out.divisor = divisor;
  out.lift = pulled;
  out.self_int = product_resolution(model, pulled, pulled);
  out.k_dot = k_product(model, divisor);

  Rational a_o_sum(0);
  Rational a_omega_sum(0);
  Rational c2_local_sum(0);
  for (std::size_t p = 0; p < model.singular_points.size(); ++p) {
    const LocalInvariants local =
        local_invariants_from(model, model.singular_points[p], pulled);
    out.a_terms.push_back(PointTerms{p, local.a_O, local.a_omega, local.c2_local,
                                     local.k_summands == 1});
    a_o_sum += local.a_O;
    a_omega_sum += local.a_omega;
    c2_local_sum += local.c2_local;
  }

  out.c2_global = Rational(12 - model.degree) + k_dot_resolution(model, tilde) +
                  product_resolution(model, tilde, tilde) - c2_local_sum;
  out.chi_omega = Rational(2) + out.k_dot + Rational(2) * out.self_int -
                  out.c2_global + a_omega_sum;
  out.chi_structure =
      Rational(1) + (out.self_int - out.k_dot) / Rational(2) + a_o_sum;
  return out;
}

ChiBreakdown chi_omega1(const SurfaceModel& model, const WeilClass& divisor) {
  return chi_from_pullback(model, divisor, tilde_divisor(model, divisor),
                           pullback(model, divisor));
}

Rational chi_rank1(const SurfaceModel& model, const WeilClass& divisor) {
  return chi_omega1(model, divisor).chi_structure;
}

bool baker_cartier_bv(std::int64_t h0_tangent, std::int64_t n_minus2_curves,
                      std::int64_t rho) {
  if (h0_tangent < 0 || n_minus2_curves < 0 || rho < 0)
    throw std::invalid_argument("baker_cartier_bv: inputs must be non-negative");
  return h0_tangent == 10 - n_minus2_curves - 2 * rho;
}

}  // namespace gdp
