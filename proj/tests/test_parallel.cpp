// The OpenMP reduction must return bit-identical results to the serial reference
// regardless of thread count, so every report stays reproducible.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "tentops/quadrature.hpp"
#include "tentops/tentnorm.hpp"

using namespace tentops;

TEST_CASE("parallel and serial mesh reductions agree bitwise") {
    QuadratureSpec spec;
    spec.radial_levels = 12;
    const std::function<double(Complex)> densities[] = {
        [](Complex) { return 1.0; },
        [](Complex z) { return std::norm(z) + z.real(); },
        [](Complex z) { return 1.0 / std::pow(std::norm(1.0 - 0.99 * z), 1.25); },
    };
    for (double gamma : {-0.5, 0.0, 1.0, 3.0}) {
        const DiskMesh mesh = build_disk_mesh(spec, gamma);
        for (const auto& d : densities)
            CHECK(integrate_mesh(mesh, d) == integrate_mesh_serial(mesh, d));
    }
}

TEST_CASE("kernel test is reproducible across repeated parallel runs") {
    QuadratureSpec spec;
    WeightedIntegrand mu{[](Complex z) { return 1.0 / std::abs(1.0 - z); }, 1.0};
    const auto grid = default_sup_grid(8, 8);
    const auto a = kernel_test(mu, 3.0, grid, spec);
    const auto b = kernel_test(mu, 3.0, grid, spec);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == b.values[i]);
    CHECK(a.sup == b.sup);
}
