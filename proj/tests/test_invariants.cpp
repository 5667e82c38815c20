#include <doctest.h>

#include <gdp/invariants.hpp>

#include "fixtures.hpp"

#include <random>
#include <vector>

using namespace gdp;
using gdp::testing::a4_model;
using gdp::testing::smooth_config_model;
using gdp::testing::two_point_model;

namespace {

WeilClass cls(const SurfaceModel& model, const std::vector<std::int64_t>& values) {
    return WeilClass::from_coefficients(model, values);
}

}  // namespace

TEST_CASE("floor_divisor floors componentwise toward negative infinity") {
    QDivisor d{RVector(4)};
    d.coefficients << Rational(6, 5), Rational(-2, 5), Rational(2), Rational(-7, 3);
    QDivisor f = floor_divisor(d);
    CHECK(f.coefficients(0) == Rational(1));
    CHECK(f.coefficients(1) == Rational(-1));
    CHECK(f.coefficients(2) == Rational(2));
    CHECK(f.coefficients(3) == Rational(-3));
}

TEST_CASE("golden local invariants at the A4 point for the generator") {
    SurfaceModel m = a4_model();
    const SingularPoint& x = m.singular_points[0];
    WeilClass g = cls(m, {1});

    CHECK(a_rank1(m, x, g) == Rational(-3, 5));
    CHECK(a_omega(m, x, g) == Rational(-1));
    CHECK(c2_local_omega(m, x, g) == Rational(18, 5));
    CHECK_FALSE(is_cartier_at(m, x, g));

    LocalInvariants inv = local_invariants(m, x, g);
    CHECK(inv.a_O == Rational(-3, 5));
    CHECK(inv.a_omega == Rational(-1));
    CHECK(inv.c2_local == Rational(18, 5));
    CHECK(inv.k_summands == 0);
    // F = floor(pi*D) - pi*D on the exceptional curves.
    CHECK(inv.frac_part.coeff(m, 0) == Rational(0));
    CHECK(inv.frac_part.coeff(m, 1) == Rational(-2, 5));
    CHECK(inv.frac_part.coeff(m, 2) == Rational(-4, 5));
    CHECK(inv.frac_part.coeff(m, 3) == Rational(-1, 5));
    CHECK(inv.frac_part.coeff(m, 4) == Rational(-3, 5));
}

TEST_CASE("local invariants of the zero divisor at the A4 point") {
    SurfaceModel m = a4_model();
    const SingularPoint& x = m.singular_points[0];
    WeilClass zero = cls(m, {0});

    CHECK(a_rank1(m, x, zero) == Rational(0));
    CHECK(a_omega(m, x, zero) == Rational(-4, 5));
    CHECK(c2_local_omega(m, x, zero) == Rational(24, 5));
    CHECK(is_cartier_at(m, x, zero));
    CHECK(local_invariants(m, x, zero).k_summands == 1);
}

TEST_CASE("Cartier divisors have vanishing rank-1 a-invariant") {
    SurfaceModel m = a4_model();
    const SingularPoint& x = m.singular_points[0];
    for (std::int64_t a : {-10, -5, 0, 5, 10}) {
        WeilClass d = cls(m, {a});
        CHECK(is_cartier_at(m, x, d));
        CHECK(a_rank1(m, x, d) == Rational(0));
        CHECK(a_omega(m, x, d) == Rational(-4, 5));
    }
    for (std::int64_t a : {-3, 1, 2, 7}) {
        CHECK_FALSE(is_cartier_at(m, x, cls(m, {a})));
    }
}

TEST_CASE("a-invariants only depend on the class modulo Cartier divisors") {
    SurfaceModel m = a4_model();
    const SingularPoint& x = m.singular_points[0];
    for (std::int64_t a = -2; a <= 2; ++a) {
        const Rational base_a = a_rank1(m, x, cls(m, {a}));
        const Rational base_o = a_omega(m, x, cls(m, {a}));
        for (std::int64_t shift : {-10, -5, 5, 10}) {
            CHECK(a_rank1(m, x, cls(m, {a + shift})) == base_a);
            CHECK(a_omega(m, x, cls(m, {a + shift})) == base_o);
        }
    }
}

TEST_CASE("a-invariant denominators divide the local group order") {
    SurfaceModel m = a4_model();
    const SingularPoint& x = m.singular_points[0];
    for (std::int64_t a = -6; a <= 6; ++a) {
        const Rational v = a_rank1(m, x, cls(m, {a}));
        CAPTURE(a);
        CHECK(Int(5) % v.den() == 0);
    }
}

TEST_CASE("c2 shifts by the square of the local c1 when twisting") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::int64_t> dist(-4, 4);
    for (const SurfaceModel& m : {a4_model(), two_point_model()}) {
        std::vector<std::int64_t> values(minus_one_ids(m).size());
        for (int trial = 0; trial < 10; ++trial) {
            for (auto& v : values) v = dist(rng);
            WeilClass d = cls(m, values);
            WeilClass zero;
            for (int id : minus_one_ids(m)) zero.coefficients[id] = 0;
            for (const SingularPoint& x : m.singular_points) {
                QDivisor c1 = local_c1(m, x, d);
                CHECK(c2_local_omega(m, x, d) - c2_local_omega(m, x, zero) ==
                      product_resolution(m, c1, c1));
            }
        }
    }
}

TEST_CASE("local invariants at the two A1 points") {
    SurfaceModel m = two_point_model();
    WeilClass d = cls(m, {1, 0});
    const SingularPoint& x1 = m.singular_points[0];  // E2, meets the divisor
    const SingularPoint& x2 = m.singular_points[1];  // E3, does not

    CHECK(a_rank1(m, x1, d) == Rational(-1, 4));
    CHECK(a_omega(m, x1, d) == Rational(0));
    CHECK(c2_local_omega(m, x1, d) == Rational(1));
    CHECK_FALSE(is_cartier_at(m, x1, d));

    CHECK(a_rank1(m, x2, d) == Rational(0));
    CHECK(a_omega(m, x2, d) == Rational(-1, 2));
    CHECK(c2_local_omega(m, x2, d) == Rational(3, 2));
    CHECK(is_cartier_at(m, x2, d));
}

TEST_CASE("global c2 on the A4 surface") {
    SurfaceModel m = a4_model();
    CHECK(c2_global_omega(m, cls(m, {1})) == Rational(7, 5));
    CHECK(c2_global_omega(m, cls(m, {0})) == Rational(11, 5));
}

TEST_CASE("global c2 on the two-point configuration") {
    SurfaceModel m = two_point_model();
    CHECK(c2_global_omega(m, cls(m, {1, 0})) == Rational(1, 2));
}

TEST_CASE("global c2 without singular points reduces to 12 - degree") {
    SurfaceModel m = smooth_config_model();
    CHECK(c2_global_omega(m, cls(m, {0})) == Rational(4));
    // Twisting adds K.D + D^2 = -1 - 1.
    CHECK(c2_global_omega(m, cls(m, {1})) == Rational(2));
}

TEST_CASE("the precomputed-pullback entry points agree with the direct ones") {
    SurfaceModel m = a4_model();
    WeilClass d = cls(m, {3});
    QDivisor tilde = tilde_divisor(m, d);
    QDivisor pulled = pullback(m, d);
    const SingularPoint& x = m.singular_points[0];

    LocalInvariants direct = local_invariants(m, x, d);
    LocalInvariants reused = local_invariants_from(m, x, pulled);
    CHECK(direct.a_O == reused.a_O);
    CHECK(direct.a_omega == reused.a_omega);
    CHECK(direct.c2_local == reused.c2_local);
    CHECK(direct.k_summands == reused.k_summands);
    CHECK(c2_global_omega(m, d) == c2_global_omega_from(m, tilde, pulled));
}
