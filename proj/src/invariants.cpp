#include "gdp/invariants.hpp"

namespace gdp {

QDivisor floor_divisor(const QDivisor& divisor) {
  QDivisor out = divisor;
  for (Eigen::Index i = 0; i < out.coefficients.rows(); ++i)
    out.coefficients(i) = Rational(out.coefficients(i).floor());
  return out;
}

LocalInvariants local_invariants_from(const SurfaceModel& model, const SingularPoint& x,
                                      const QDivisor& pulled) {
  LocalInvariants out;
  out.frac_part = QDivisor::zero(model);

  bool integral = true;
  for (int id : x.curve_ids) {
    const auto pos = position_of(model, id);
    const Rational& value = pulled.coefficients(pos);
    if (!value.is_integer()) integral = false;
    out.frac_part.coefficients(pos) = Rational(value.floor()) - value;
  }
  out.k_summands = integral ? 1 : 0;

  const QDivisor floored = floor_divisor(pulled);
  out.a_O = (product_resolution(model, out.frac_part, floored) -
             k_dot_resolution(model, out.frac_part)) /
            Rational(2);

  const Rational inv_group = Rational(1) / Rational(x.group_order());
  out.a_omega = Rational(2) * out.a_O + inv_group - Rational(out.k_summands);

  // c1(x, D-tilde) = -(pi*D restricted over x); its self-product equals that
  // of the restriction itself.
  QDivisor local = QDivisor::zero(model);
  for (int id : x.curve_ids) {
    const auto pos = position_of(model, id);
    local.coefficients(pos) = pulled.coefficients(pos);
  }
  const Rational c1_squared = product_resolution(model, local, local);
  out.c2_local = Rational(1 + x.num_components()) - inv_group + c1_squared;
  return out;
}

LocalInvariants local_invariants(const SurfaceModel& model, const SingularPoint& x,
                                 const WeilClass& divisor) {
  return local_invariants_from(model, x, pullback(model, divisor));
}

bool is_cartier_at(const SurfaceModel& model, const SingularPoint& x,
                   const WeilClass& divisor) {
  return local_invariants(model, x, divisor).k_summands == 1;
}

Rational a_rank1(const SurfaceModel& model, const SingularPoint& x,
                 const WeilClass& divisor) {
  return local_invariants(model, x, divisor).a_O;
}

Rational a_omega(const SurfaceModel& model, const SingularPoint& x,
                 const WeilClass& divisor) {
  return local_invariants(model, x, divisor).a_omega;
}

Rational c2_local_omega(const SurfaceModel& model, const SingularPoint& x,
                        const WeilClass& divisor) {
  return local_invariants(model, x, divisor).c2_local;
}

Rational c2_global_omega_from(const SurfaceModel& model, const QDivisor& tilde,
                              const QDivisor& pulled) {
  Rational local_sum(0);
  for (const SingularPoint& x : model.singular_points)
    local_sum += local_invariants_from(model, x, pulled).c2_local;
  return Rational(12 - model.degree) + k_dot_resolution(model, tilde) +
         product_resolution(model, tilde, tilde) - local_sum;
}

Rational c2_global_omega(const SurfaceModel& model, const WeilClass& divisor) {
  return c2_global_omega_from(model, tilde_divisor(model, divisor),
                              pullback(model, divisor));
}

}  // namespace gdp
