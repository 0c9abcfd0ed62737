#include "tentops/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tentops {

double default_synthesis_exponent(double p) { return std::max(1.0, 1.0 / p) + 1.0; }

AnalyticFn synthesize(const std::vector<Complex>& x, const Lattice& Z, double L, double p,
                      double alpha) {
    if (!(p > 0) || !(alpha > -2)) throw std::invalid_argument("need p > 0, alpha > -2");
    if (!(L > std::max(1.0, 1.0 / p)))
        throw std::invalid_argument("synthesis exponent must exceed max(1, 1/p)");
    if (x.size() != Z.nodes.size())
        throw std::invalid_argument("coefficient length must match lattice size");
    AnalyticFn f;
    const double s = L + (alpha + 2.0) / p;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == Complex{}) continue;
        const double c = std::pow(1.0 - std::norm(Z.nodes[j]), L);
        f.atoms.push_back({Z.nodes[j], s, x[j] * c});
    }
    return f;
}

std::vector<Complex> discretize(const AnalyticFn& f, const Lattice& Z, double p,
                                double alpha) {
    if (!(p > 0) || !(alpha > -2)) throw std::invalid_argument("need p > 0, alpha > -2");
    std::vector<Complex> x;
    x.reserve(Z.nodes.size());
    const double e = (alpha + 2.0) / p;
    for (const auto& a : Z.nodes)
        x.push_back(evaluate(f, a) * std::pow(1.0 - std::norm(a), e));
    return x;
}

std::vector<Complex> multiplier_apply(const std::vector<Complex>& y,
                                      const std::vector<Complex>& x) {
    if (y.size() != x.size()) throw std::invalid_argument("multiplier length mismatch");
    std::vector<Complex> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = y[j] * x[j];
    return out;
}

MultiplierCheck multiplier_bound_check(const std::vector<Complex>& y, const Lattice& Z,
                                       double p, double q,
                                       const std::vector<std::vector<Complex>>& x_suite,
                                       const std::vector<Complex>& u_grid) {
    if (!(q > 0) || !(q < p)) throw std::invalid_argument("multiplier check needs 0 < q < p");
    MultiplierCheck res;
    res.y_norm = seq_tent_norm(y, Z, p * q / (p - q), u_grid);
    for (const auto& x : x_suite) {
        const double src = seq_tent_norm(x, Z, p, u_grid);
        const double img = seq_tent_norm(multiplier_apply(y, x), Z, q, u_grid);
        const double ratio = src > 0 ? img / src : 0.0;
        res.ratios.push_back(ratio);
        res.max_ratio = std::max(res.max_ratio, ratio);
    }
    return res;
}

DecayProfile truncation_check(const WeightedIntegrand& mu, double t,
                              const std::vector<double>& radii,
                              const std::vector<Complex>& a_grid,
                              const QuadratureSpec& spec) {
    if (!std::is_sorted(radii.begin(), radii.end()))
        throw std::invalid_argument("truncation radii must be increasing");
    DecayProfile prof;
    prof.radii = radii;
    for (double r : radii) {
        WeightedIntegrand tail;
        tail.weight_exponent = mu.weight_exponent;
        tail.density = [r, &mu](Complex z) {
            return std::abs(z) >= r ? mu.density(z) : 0.0;
        };
        prof.values.push_back(kernel_test(tail, t, a_grid, spec).sup);
    }
    return prof;
}

}  // namespace tentops
