#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "tentops/geometry.hpp"

using namespace tentops;

namespace {

// Moebius transform phi_a(z) = (a - z)/(1 - conj(a) z)
Complex moebius(Complex a, Complex z) {
    return (a - z) / (1.0 - std::conj(a) * z);
}

}  // namespace

TEST_CASE("pseudo-hyperbolic distance basics") {
    CHECK(pseudo_hyperbolic(0.0, 0.0) == 0.0);
    CHECK(pseudo_hyperbolic(0.0, Complex{0.3, 0.4}) == doctest::Approx(0.5));
    const Complex z{0.2, -0.3}, w{-0.5, 0.1};
    CHECK(pseudo_hyperbolic(z, w) == doctest::Approx(pseudo_hyperbolic(w, z)));
    CHECK(pseudo_hyperbolic(z, z) == doctest::Approx(0.0));
}

TEST_CASE("pseudo-hyperbolic distance is Moebius invariant") {
    std::mt19937 rng(7);
    auto pt = [&rng]() {
        while (true) {
            const double x = std::ldexp(double(rng()), -31) - 1.0;
            const double y = std::ldexp(double(rng()), -31) - 1.0;
            if (x * x + y * y < 0.9) return Complex{x, y};
        }
    };
    for (int i = 0; i < 200; ++i) {
        const Complex a = pt(), z = pt(), w = pt();
        CHECK(pseudo_hyperbolic(moebius(a, z), moebius(a, w)) ==
              doctest::Approx(pseudo_hyperbolic(z, w)).epsilon(1e-10));
    }
}

TEST_CASE("pseudo-hyperbolic triangle-type inequality") {
    std::mt19937 rng(11);
    auto pt = [&rng]() {
        while (true) {
            const double x = std::ldexp(double(rng()), -31) - 1.0;
            const double y = std::ldexp(double(rng()), -31) - 1.0;
            if (x * x + y * y < 0.95) return Complex{x, y};
        }
    };
    for (int i = 0; i < 500; ++i) {
        const Complex z = pt(), w = pt(), v = pt();
        const double a = pseudo_hyperbolic(z, v), b = pseudo_hyperbolic(v, w);
        CHECK(pseudo_hyperbolic(z, w) <= (a + b) / (1.0 + a * b) + 1e-12);
    }
}

TEST_CASE("hyperbolic metric along a radius") {
    // beta(0, r) = atanh(r), and radial points add up exactly
    CHECK(hyperbolic(0.0, 0.5) == doctest::Approx(std::atanh(0.5)));
    const double b1 = hyperbolic(0.0, 0.3);
    const double b2 = hyperbolic(0.3, 0.8);
    CHECK(hyperbolic(0.0, 0.8) == doctest::Approx(b1 + b2).epsilon(1e-12));
}

TEST_CASE("non-tangential region membership") {
    const Complex eta{1.0, 0.0};
    CHECK(in_nontangential(Complex{0.5, 0.0}, eta, 1.0));
    CHECK_FALSE(in_nontangential(Complex{-0.5, 0.0}, eta, 1.0));
    // wider aperture admits more
    const Complex z{0.3, 0.55};
    CHECK_FALSE(in_nontangential(z, eta, 0.8));
    CHECK(in_nontangential(z, eta, 3.0));
    CHECK_THROWS_AS((void)in_nontangential(z, eta, 0.5), std::invalid_argument);
}

TEST_CASE("Carleson box membership") {
    // S(0) is the whole disk
    CHECK(in_carleson_box(0.0, Complex{-0.9, 0.05}));
    const Complex u{0.5, 0.0};
    CHECK(in_carleson_box(u, Complex{0.6, 0.0}));
    CHECK_FALSE(in_carleson_box(u, Complex{0.3, 0.0}));  // too shallow
    CHECK(in_carleson_box(u, std::polar(0.7, 0.24)));
    CHECK_FALSE(in_carleson_box(u, std::polar(0.7, 0.3)));  // outside the arc
    // arc is centered at arg u
    const Complex u2 = std::polar(0.5, 2.0);
    CHECK(in_carleson_box(u2, std::polar(0.7, 2.2)));
    CHECK_FALSE(in_carleson_box(u2, std::polar(0.7, 0.0)));
}

TEST_CASE("hyperbolic disk membership") {
    CHECK(in_hyperbolic_disk(0.0, std::atanh(0.5) + 1e-9, Complex{0.5, 0.0}));
    CHECK_FALSE(in_hyperbolic_disk(0.0, std::atanh(0.5) - 1e-9, Complex{0.5, 0.0}));
}

TEST_CASE("lattice separation and covering") {
    const Lattice lat = generate_lattice(0.5, 0.2, 0.99);
    REQUIRE(!lat.nodes.empty());
    CHECK(is_separated(lat.nodes, 2.0 * lat.kappa - 1e-9));

    // Monte-Carlo covering check: every sample within the cap lies in some r-disk
    std::mt19937 rng(123);
    int missed = 0;
    for (int i = 0; i < 10000; ++i) {
        Complex z;
        do {
            const double x = std::ldexp(double(rng()), -31) - 1.0;
            const double y = std::ldexp(double(rng()), -31) - 1.0;
            z = {x, y};
        } while (std::abs(z) > lat.radial_cap);
        bool covered = false;
        for (const auto& a : lat.nodes)
            if (hyperbolic(a, z) < lat.r) {
                covered = true;
                break;
            }
        if (!covered) ++missed;
    }
    CHECK(missed == 0);
}

TEST_CASE("lattice parameter validation") {
    CHECK_THROWS_AS(generate_lattice(0.2, 0.3, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(generate_lattice(0.5, 0.0, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(generate_lattice(0.5, 0.2, 1.5), std::invalid_argument);
}

TEST_CASE("lattice JSON round trip") {
    const Lattice lat = generate_lattice(0.6, 0.25, 0.9);
    const Lattice back = lattice_from_json(lattice_to_json(lat));
    REQUIRE(back.nodes.size() == lat.nodes.size());
    CHECK(back.r == lat.r);
    CHECK(back.kappa == lat.kappa);
    CHECK(back.radial_cap == lat.radial_cap);
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
        CHECK(std::abs(back.nodes[i] - lat.nodes[i]) < 1e-15);
}
