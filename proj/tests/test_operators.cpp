#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "tentops/corpus.hpp"
#include "tentops/operators.hpp"

using namespace tentops;

TEST_CASE("T with g = z is the Volterra-type primitive") {
    // T_z^{1,0} f = int_0^z f, so T 1 = z and T z = z^2/2
    const AnalyticFn g = AnalyticFn::monomial(1);
    const auto tz = taylor(apply_T(AnalyticFn::constant(1.0), g, 1, 0, 16), 3);
    CHECK(std::abs(tz[0]) < 1e-15);
    CHECK(std::abs(tz[1] - 1.0) < 1e-14);
    CHECK(std::abs(tz[2]) < 1e-14);
    const auto tz2 = taylor(apply_T(AnalyticFn::monomial(1), g, 1, 0, 16), 3);
    CHECK(std::abs(tz2[2] - 0.5) < 1e-14);
}

TEST_CASE("image jet vanishes to order n") {
    const AnalyticFn f = AnalyticFn::kernel(0.6, 1.5);
    const AnalyticFn g = AnalyticFn::log_kernel(0.8);
    for (int n : {1, 2, 3}) {
        const auto c = taylor(apply_T(f, g, n, 0, 32), n + 1);
        for (int j = 0; j < n; ++j) CHECK(std::abs(c[j]) < 1e-14);
    }
}

TEST_CASE("S/T duality identity is exact for k >= 1") {
    const AnalyticFn f = AnalyticFn::kernel(0.7, 2.0);
    const AnalyticFn g = AnalyticFn::log_kernel(0.9) + AnalyticFn::monomial(2);
    for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
        const auto lhs = taylor(apply_S(f, g, n, k, 96), 96);
        const auto rhs = taylor(apply_T(f, g, n, n - k, 96), 96);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            CHECK(std::abs(lhs[i] - rhs[i]) < 1e-10);
    }
}

TEST_CASE("image surrogate norm matches the norm of the actual image") {
    QuadratureSpec spec;
    const auto grid = default_sup_grid();
    SpaceParams params;  // p=q=2, alpha=beta=0, n=1, k=0
    const AnalyticFn f = AnalyticFn::kernel(0.5, 1.0);
    const AnalyticFn g = AnalyticFn::monomial(1);
    const double surrogate = image_lp_norm(f, g, params, 3.0, grid, spec);
    const AnalyticFn image = apply_T(f, g, 1, 0, 256);
    const double direct = lp_norm(image, 2.0, 0.0, 1, 3.0, grid, spec);
    CHECK(surrogate == doctest::Approx(direct).epsilon(1e-6));
}

TEST_CASE("S-kind surrogate swaps the derivative orders") {
    QuadratureSpec spec;
    const auto grid = default_sup_grid();
    SpaceParams t_params;
    t_params.n = 2;
    t_params.k = 0;
    SpaceParams s_params = t_params;
    s_params.op_kind = OpKind::S;
    const AnalyticFn f = AnalyticFn::kernel(0.6, 1.0);
    const AnalyticFn g = AnalyticFn::kernel(0.4, 1.0);
    // S_g^{2,0} integrates f'' g, T-kind with the roles of f and g swapped
    const double s_norm = image_lp_norm(f, g, s_params, 3.0, grid, spec);
    const double t_swapped = image_lp_norm(g, f, t_params, 3.0, grid, spec);
    CHECK(s_norm == doctest::Approx(t_swapped).epsilon(1e-9));
}

TEST_CASE("source norm is the Littlewood-Paley norm at the matching order") {
    QuadratureSpec spec;
    const auto grid = default_sup_grid();
    SpaceParams params;
    const AnalyticFn f = AnalyticFn::kernel(0.5, 2.0);
    CHECK(source_lp_norm(f, params, 3.0, grid, spec) ==
          doctest::Approx(lp_norm(f, 2.0, 0.0, 1, 3.0, grid, spec)));
}

TEST_CASE("empirical ratio table") {
    QuadratureSpec spec{.radial_levels = 8, .angular_base = 16, .max_angular = 256,
                        .gauss_points = 4};
    const auto grid = default_sup_grid(5, 8);
    SpaceParams params;
    const std::vector<AnalyticFn> corpus{AnalyticFn::constant(1.0),
                                         AnalyticFn::kernel(0.5, 1.0)};
    const auto table = empirical_ratio(AnalyticFn::monomial(1), params, corpus, 3.0,
                                       grid, spec);
    REQUIRE(table.entries.size() == 2);
    double best = 0.0;
    for (const auto& e : table.entries) {
        CHECK(e.source_norm > 0.0);
        CHECK(e.image_norm > 0.0);
        CHECK(e.ratio == doctest::Approx(e.image_norm / e.source_norm));
        best = std::max(best, e.ratio);
    }
    CHECK(table.max_ratio == doctest::Approx(best));
    CHECK_THROWS_AS((void)empirical_ratio(AnalyticFn::monomial(1), params, {}, 3.0,
                                          grid, spec),
                    std::invalid_argument);
}
