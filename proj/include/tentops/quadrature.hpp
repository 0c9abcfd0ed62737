#pragma once

#include <functional>
#include <vector>

#include "tentops/geometry.hpp"

namespace tentops {

/// Pointwise nonnegative density paired with a weight exponent gamma > -1.
/// Stands in for the measure density(z) (1-|z|^2)^gamma dA(z), dA normalized by 1/pi.
struct WeightedIntegrand {
    std::function<double(Complex)> density;
    double weight_exponent = 0.0;
};

struct QuadratureSpec {
    int radial_levels = 12;   // dyadic annuli graded toward |z| = 1
    int angular_base = 64;    // angular nodes in the innermost annulus
    int max_angular = 2048;
    int gauss_points = 6;     // radial Gauss-Legendre nodes per annulus
    double boundary_margin = 1e-3;
    double target_rel_err = 1e-4;

    QuadratureSpec refined() const;
    QuadratureSpec coarsened() const;
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;   // |fine - embedded coarse| estimate
    bool converged = true;
    operator double() const { return value; }
};

/// Fixed product mesh on the disk. Nodes carry weights that already include
/// (1-|z|^2)^gamma and the 1/pi normalization, so integrals reduce to weighted sums
/// of density values. The deepest annulus [1-2^-radial_levels, 1) is integrated in
/// the variable (1-r^2)^(gamma+1), which makes the pure weight integral exact.
struct DiskMesh {
    std::vector<Complex> z;
    std::vector<double> weight;
    std::vector<std::size_t> block_offset;  // per-annulus blocks; fixed reduction order
    double gamma = 0.0;
};

DiskMesh build_disk_mesh(const QuadratureSpec& spec, double gamma);

/// Weighted sum over the mesh; OpenMP-parallel over annulus blocks with partials
/// combined in block order, so the result is independent of the thread count.
double integrate_mesh(const DiskMesh& mesh, const std::function<double(Complex)>& density);

/// Serial reference for integrate_mesh; bitwise identical by construction.
double integrate_mesh_serial(const DiskMesh& mesh,
                             const std::function<double(Complex)>& density);

/// weight[i] * density(z[i]) for every node, parallel over blocks.
std::vector<double> weighted_density(const DiskMesh& mesh,
                                     const std::function<double(Complex)>& density);

/// Integral of density(z) (1-|z|^2)^gamma dA(z) over the disk.
IntegralResult disk_integral(const WeightedIntegrand& f, const QuadratureSpec& spec);

/// Same integral restricted by a membership predicate; cells straddling the region
/// boundary are refined.
IntegralResult region_integral(const WeightedIntegrand& f,
                               const std::function<bool(Complex)>& region,
                               const QuadratureSpec& spec);

/// region_integral without the embedded error estimate (half the work); used by the
/// norm evaluators that already run their own refinement studies.
double region_integral_value(const WeightedIntegrand& f,
                             const std::function<bool(Complex)>& region,
                             const QuadratureSpec& spec);

/// Trapezoidal rule over equispaced boundary points; |d eta| carries total mass 2*pi.
double boundary_integral(const std::function<double(double)>& h, int samples);

/// LHS/RHS ratio of the Forelli-Rudin estimate
///   int (1-|z|^2)^s / (|1-conj(a)z|^r |1-conj(b)z|^t) dA
///     vs 1 / (|1-conj(a)b|^r (1-|b|^2)^(t-s-2)).
/// Throws std::invalid_argument unless s > -1, r,t > 0, r+t-s-2 > 0 and r < s+2 < t.
double forelli_rudin_check(Complex a, Complex b, double s, double r, double t,
                           const QuadratureSpec& spec);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace tentops
