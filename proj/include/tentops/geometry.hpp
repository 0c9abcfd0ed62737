#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace tentops {

using Complex = std::complex<double>;

/// Pseudo-hyperbolic distance |(z-w)/(1-conj(w)z)| on the unit disk.
double pseudo_hyperbolic(Complex z, Complex w);

/// Hyperbolic (Bergman) metric beta(z,w) = 1/2 log((1+rho)/(1-rho)).
double hyperbolic(Complex z, Complex w);

/// Stolz-type approach region: |z - eta| < zeta * (1 - |z|^2), eta on the circle.
/// Requires zeta > 1/2.
bool in_nontangential(Complex z, Complex eta, double zeta);

/// Carleson box S(u). For u = r e^{i theta} != 0 this is
/// { lambda e^{it} : |t - theta| <= (1-r)/2, 1 - lambda <= 1 - r }; S(0) is the whole disk.
bool in_carleson_box(Complex u, Complex z);

/// Hyperbolic disk membership beta(center, z) < r (strict).
bool in_hyperbolic_disk(Complex center, double r, Complex z);

/// Exhaustive pairwise check beta(a_i, a_j) >= tau for i != j.
bool is_separated(std::span<const Complex> nodes, double tau);

/// Finite (r, kappa)-lattice: hyperbolically separated nodes whose r-disks
/// cover { |z| <= radial_cap }.
struct Lattice {
    std::vector<Complex> nodes;
    double r = 0;
    double kappa = 0;
    double radial_cap = 0;
};

/// Deterministic annular lattice: rings at hyperbolic radii m * 2*kappa from the
/// origin, angularly equispaced so that adjacent nodes keep beta-separation >= 2*kappa.
/// Throws std::invalid_argument unless r > kappa > 0 and 0 < radial_cap < 1.
Lattice generate_lattice(double r, double kappa, double radial_cap);

std::string lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const std::string& text);

}  // namespace tentops
