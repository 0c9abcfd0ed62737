#pragma once

#include <optional>
#include <vector>

#include "tentops/funcmodel.hpp"
#include "tentops/geometry.hpp"
#include "tentops/quadrature.hpp"

namespace tentops {

/// Exponent tuple defining source/target spaces and the operator.
enum class OpKind { T, S };

struct SpaceParams {
    double p = 2.0;
    double q = 2.0;
    double alpha = 0.0;
    double beta = 0.0;
    int n = 1;
    int k = 0;
    OpKind op_kind = OpKind::T;

    void validate() const;  // throws std::invalid_argument
};

/// Nonnegative values sampled along increasing radii in (0,1).
struct DecayProfile {
    std::vector<double> radii;
    std::vector<double> values;

    double max_value() const;
    double final_value() const;
};

/// Default annuli radii 1-2^-m, m = 1..count.
std::vector<double> dyadic_radii(int count = 10);

/// Structured grid of points in the disk: origin plus annuli at the given radii
/// with angles_per_ring equispaced angles each.
std::vector<Complex> annular_grid(const std::vector<double>& radii, int angles_per_ring);

struct KernelTestResult {
    double sup = 0.0;
    Complex arg_sup;
    std::vector<Complex> points;
    std::vector<double> values;  // aligned with points
};

/// sup over the a-grid of int (1-|a|^2)^t / |1-conj(a)z|^(t+1) dmu(z) where
/// dmu = density (1-|z|^2)^gamma dA. The quadrature mesh is built once and shared
/// across all a.
KernelTestResult kernel_test(const WeightedIntegrand& mu, double t,
                             const std::vector<Complex>& a_grid,
                             const QuadratureSpec& spec);

/// Per-annulus maxima of the kernel-test integral over |a| = radii.
DecayProfile kernel_test_profile(const WeightedIntegrand& mu, double t,
                                 const std::vector<double>& radii, int angles_per_ring,
                                 const QuadratureSpec& spec);

/// Mixed-norm tent quasinorm with area integrals over non-tangential regions and an
/// outer boundary integral.
double tpq_norm(const AnalyticFn& f, double p, double q, double alpha, double aperture,
                int eta_samples, const QuadratureSpec& spec);

/// Boundary integral of the non-tangential sup of |f| (grid surrogate for esssup).
double tinfq_norm(const AnalyticFn& f, double q, double aperture, int eta_samples,
                  const QuadratureSpec& spec);

/// sup over the u-grid of Carleson-box averages of |f|^p (1-|z|^2)^(alpha+1), power 1/p.
double tpinf_norm(const AnalyticFn& f, double p, double alpha,
                  const std::vector<Complex>& u_grid, const QuadratureSpec& spec);

/// Single Carleson-box average at u (the inner functional of tpinf_norm, before sup
/// and the 1/p power).
double box_average(const AnalyticFn& f, double p, double alpha, Complex u,
                   const QuadratureSpec& spec);

/// Littlewood-Paley surrogate norm: Taylor jet at 0 (orders 0..n-1) plus the
/// kernel-test sup of |f^(n)|^p (1-|z|^2)^(np+alpha+1), all to the power 1/p.
double lp_norm(const AnalyticFn& f, double p, double alpha, int n, double t,
               const std::vector<Complex>& a_grid, const QuadratureSpec& spec);

/// Per-annulus kernel-test maxima of the lp_norm integrand; vanishing profiles
/// certify membership in the little space.
DecayProfile little_profile(const AnalyticFn& f, double p, double alpha, int n, double t,
                            const std::vector<double>& radii, const QuadratureSpec& spec);

/// max over samples of |f^(n)(z)| (1-|z|^2)^((alpha+2)/p + n) / lp_norm(f).
double growth_ratio(const AnalyticFn& f, double p, double alpha, int n,
                    const std::vector<Complex>& z_samples, const QuadratureSpec& spec);

/// Sequence tent norm: sup over the u-grid of box sums of |x_j|^p (1-|a_j|^2)
/// normalized by 1-|u|^2, power 1/p.
double seq_tent_norm(const std::vector<Complex>& x, const Lattice& Z, double p,
                     const std::vector<Complex>& u_grid);

DecayProfile seq_little_profile(const std::vector<Complex>& x, const Lattice& Z, double p,
                                const std::vector<double>& radii, int angles_per_ring);

/// Default a/u grid: origin plus dyadic annuli with a fixed angular count.
std::vector<Complex> default_sup_grid(int levels = 8, int angles_per_ring = 8);

}  // namespace tentops
