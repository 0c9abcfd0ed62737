#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "tentops/funcmodel.hpp"

using namespace tentops;

TEST_CASE("kernel atom evaluation") {
    const AnalyticFn f = AnalyticFn::kernel(0.5, 1.0);
    CHECK(std::abs(evaluate(f, 0.5) - 1.0 / 0.75) < 1e-14);
    CHECK(std::abs(evaluate(f, 0.0) - 1.0) < 1e-14);
    const AnalyticFn g = AnalyticFn::kernel(Complex{0.0, 0.8}, 2.0);
    const Complex z{0.1, 0.2};
    const Complex expected = std::pow(1.0 - std::conj(Complex{0.0, 0.8}) * z, -2.0);
    CHECK(std::abs(evaluate(g, z) - expected) < 1e-14);
}

TEST_CASE("log atom evaluation and derivative") {
    const AnalyticFn f = AnalyticFn::log_kernel(1.0);
    CHECK(std::abs(evaluate(f, 0.5) - std::log(2.0)) < 1e-14);
    // d/dz log(1/(1-z)) = 1/(1-z)
    const AnalyticFn fp = derivative(f, 1);
    CHECK(std::abs(evaluate(fp, 0.5) - 2.0) < 1e-13);
    CHECK(fp.logs.empty());
}

TEST_CASE("derivatives match finite differences") {
    AnalyticFn f = AnalyticFn::kernel(0.7, 1.5, Complex{2.0, -1.0});
    f += AnalyticFn::log_kernel(0.4);
    f += AnalyticFn::monomial(3, 0.25);
    const AnalyticFn fp = derivative(f, 1);
    const double h = 1e-6;
    for (Complex z : {Complex{0.2, 0.1}, Complex{-0.4, 0.3}, Complex{0.0, -0.6}}) {
        const Complex fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2.0 * h);
        CHECK(std::abs(evaluate(fp, z) - fd) < 1e-7);
    }
}

TEST_CASE("iterated derivative of a kernel atom is exact") {
    // d^m/dz^m (1 - a z)^-s = a^m s (s+1)...(s+m-1) (1 - a z)^-(s+m)
    const double a = 0.6, s = 1.25;
    const AnalyticFn f = AnalyticFn::kernel(a, s);
    const AnalyticFn d3 = derivative(f, 3);
    const Complex z{0.3, -0.2};
    const Complex expected = std::pow(a, 3) * s * (s + 1) * (s + 2) *
                             std::pow(1.0 - a * z, -(s + 3));
    CHECK(std::abs(evaluate(d3, z) - expected) < 1e-12);
}

TEST_CASE("Taylor coefficients of the geometric kernel") {
    // (1 - a z)^-1 has coefficients a^m
    const double a = 0.8;
    const auto c = taylor(AnalyticFn::kernel(a, 1.0), 10);
    REQUIRE(c.size() == 11);
    for (int m = 0; m <= 10; ++m)
        CHECK(std::abs(c[m] - std::pow(a, m)) < 1e-14);
    // log(1/(1-az)) has coefficients a^m/m
    const auto cl = taylor(AnalyticFn::log_kernel(a), 6);
    CHECK(std::abs(cl[0]) < 1e-15);
    for (int m = 1; m <= 6; ++m)
        CHECK(std::abs(cl[m] - std::pow(a, m) / m) < 1e-14);
}

TEST_CASE("integration followed by differentiation is the identity") {
    const AnalyticFn f = AnalyticFn::kernel(0.5, 2.0) + AnalyticFn::monomial(2, 3.0);
    const AnalyticFn F = integrate_n(f, 2, 64);
    // F vanishes to order 2 at 0
    const auto c = taylor(F, 4);
    CHECK(std::abs(c[0]) < 1e-15);
    CHECK(std::abs(c[1]) < 1e-15);
    const AnalyticFn back = derivative(F, 2);
    for (Complex z : {Complex{0.1, 0.0}, Complex{0.2, -0.3}})
        CHECK(std::abs(evaluate(back, z) - evaluate(f, z)) < 1e-10);
}

TEST_CASE("products of same-base kernel atoms stay exact") {
    const AnalyticFn f = AnalyticFn::kernel(0.9, 1.5);
    const AnalyticFn g = AnalyticFn::kernel(0.9, 2.5);
    const AnalyticFn fg = product(f, g, 32);
    // exact: no series fallback, valid arbitrarily close to the boundary
    CHECK(fg.series.coeffs.empty());
    const Complex z{0.95, 0.0};
    CHECK(std::abs(evaluate(fg, z) - std::pow(1.0 - 0.9 * 0.95, -4.0)) < 1e-10);
}

TEST_CASE("general products go through the Cauchy product") {
    const AnalyticFn f = AnalyticFn::kernel(0.5, 1.0);
    const AnalyticFn g = AnalyticFn::kernel(0.3, 1.0);
    const AnalyticFn fg = product(f, g, 128);
    const Complex z{0.4, 0.2};
    CHECK(std::abs(evaluate(fg, z) - evaluate(f, z) * evaluate(g, z)) < 1e-10);
}

TEST_CASE("boundedness test family") {
    // f_u(u) = (1-|u|^2)^-(alpha+2)/p and f_u(0) = 1
    const Complex u{0.5, 0.0};
    const AnalyticFn fu = test_fn_boundedness(u, 2.0, 0.0);
    CHECK(std::abs(evaluate(fu, 0.0) - 1.0) < 1e-14);
    CHECK(std::abs(evaluate(fu, u) - std::pow(0.75, -1.0)) < 1e-12);
}

TEST_CASE("compactness test family") {
    const Complex zj{0.9, 0.0};
    const double p = 2.0, alpha = 0.0;
    const AnalyticFn fj = test_fn_compactness(zj, p, alpha);
    const double w = 1.0 - std::norm(zj);
    CHECK(std::abs(evaluate(fj, 0.0) - std::pow(w, 1.0 / (2.0 * p))) < 1e-13);
    CHECK(std::abs(evaluate(fj, zj) - std::pow(w, -(alpha + 2.0) / p)) < 1e-10);
}

TEST_CASE("function JSON round trip") {
    AnalyticFn f = AnalyticFn::kernel(Complex{0.6, -0.2}, 1.75, Complex{1.0, 2.0});
    f += AnalyticFn::log_kernel(0.5, Complex{0.0, 1.0});
    f += AnalyticFn::from_series({Complex{1, 0}, Complex{0, 2}, Complex{-3, 0}});
    const AnalyticFn back = analytic_fn_from_json(analytic_fn_to_json(f));
    for (Complex z : {Complex{0.0, 0.0}, Complex{0.3, 0.4}, Complex{-0.7, 0.1}})
        CHECK(std::abs(evaluate(back, z) - evaluate(f, z)) < 1e-13);
}

TEST_CASE("zero detection and scaling") {
    CHECK(AnalyticFn{}.is_zero());
    CHECK_FALSE(AnalyticFn::constant(1.0).is_zero());
    CHECK(derivative(AnalyticFn::constant(5.0), 1).is_zero());
    const AnalyticFn f = AnalyticFn::kernel(0.5, 1.0).scaled(Complex{0.0, 2.0});
    CHECK(std::abs(evaluate(f, 0.0) - Complex{0.0, 2.0}) < 1e-15);
}
