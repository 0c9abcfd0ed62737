#pragma once

#include <vector>

#include "tentops/funcmodel.hpp"
#include "tentops/tentnorm.hpp"

namespace tentops {

/// Atomic synthesis: f(z) = sum_j x_j (1-|a_j|^2)^L / (1-conj(a_j)z)^(L+(alpha+2)/p).
/// Requires L > max(1, 1/p) and |x| = |nodes|.
AnalyticFn synthesize(const std::vector<Complex>& x, const Lattice& Z, double L, double p,
                      double alpha);

/// Default exponent max(1, 1/p) + 1, strictly inside the admissible range.
double default_synthesis_exponent(double p);

/// Discretization: x_j = f(a_j) (1-|a_j|^2)^((alpha+2)/p).
std::vector<Complex> discretize(const AnalyticFn& f, const Lattice& Z, double p,
                                double alpha);

/// Pointwise multiplier M_y x = {y_j x_j}.
std::vector<Complex> multiplier_apply(const std::vector<Complex>& y,
                                      const std::vector<Complex>& x);

struct MultiplierCheck {
    double max_ratio = 0.0;      // max over the suite of ||M_y x||_q / ||x||_p
    double y_norm = 0.0;         // ||y||_{pq/(p-q)}
    std::vector<double> ratios;  // per suite member
};

/// Forward (Hoelder) direction of the multiplier characterization for 0 < q < p.
MultiplierCheck multiplier_bound_check(const std::vector<Complex>& y, const Lattice& Z,
                                       double p, double q,
                                       const std::vector<std::vector<Complex>>& x_suite,
                                       const std::vector<Complex>& u_grid);

/// Kernel-test sup of the tail measure chi_{|z| >= r} dmu for each r; vanishing
/// profiles certify vanishing Carleson measures.
DecayProfile truncation_check(const WeightedIntegrand& mu, double t,
                              const std::vector<double>& radii,
                              const std::vector<Complex>& a_grid,
                              const QuadratureSpec& spec);

}  // namespace tentops
