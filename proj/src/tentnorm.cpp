#include "tentops/tentnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tentops {

namespace {
constexpr double kPi = std::numbers::pi;

double abs_pow(Complex v, double p) { return std::pow(std::norm(v), 0.5 * p); }
}  // namespace

void SpaceParams::validate() const {
    if (!(p > 0) || !(q > 0)) throw std::invalid_argument("exponents p, q must be positive");
    if (!(alpha > -2) || !(beta > -2))
        throw std::invalid_argument("weights alpha, beta must exceed -2");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 0 || k >= n) throw std::invalid_argument("k must satisfy 0 <= k < n");
    if (op_kind == OpKind::S && k != 0)
        throw std::invalid_argument("S-kind criteria are stated for k = 0; use the "
                                    "T-kind with n-k for k >= 1");
}

double DecayProfile::max_value() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double DecayProfile::final_value() const { return values.empty() ? 0.0 : values.back(); }

std::vector<double> dyadic_radii(int count) {
    std::vector<double> r;
    for (int m = 1; m <= count; ++m) r.push_back(1.0 - std::ldexp(1.0, -m));
    return r;
}

std::vector<Complex> annular_grid(const std::vector<double>& radii, int angles_per_ring) {
    std::vector<Complex> pts;
    for (double r : radii)
        for (int j = 0; j < angles_per_ring; ++j)
            pts.push_back(std::polar(r, 2.0 * kPi * j / angles_per_ring));
    return pts;
}

std::vector<Complex> default_sup_grid(int levels, int angles_per_ring) {
    std::vector<Complex> pts{Complex{0.0, 0.0}};
    const auto ring = annular_grid(dyadic_radii(levels), angles_per_ring);
    pts.insert(pts.end(), ring.begin(), ring.end());
    return pts;
}

KernelTestResult kernel_test(const WeightedIntegrand& mu, double t,
                             const std::vector<Complex>& a_grid,
                             const QuadratureSpec& spec) {
    if (t <= 0) throw std::invalid_argument("kernel test needs t > 0");
    const DiskMesh mesh = build_disk_mesh(spec, mu.weight_exponent);
    const std::vector<double> d = weighted_density(mesh, mu.density);

    KernelTestResult res;
    res.points = a_grid;
    res.values.resize(a_grid.size());
    const double ex = -0.5 * (t + 1.0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t ia = 0; ia < a_grid.size(); ++ia) {
        const Complex ca = std::conj(a_grid[ia]);
        const double amp = std::pow(1.0 - std::norm(a_grid[ia]), t);
        double s = 0.0;
        for (std::size_t i = 0; i < mesh.z.size(); ++i)
            s += d[i] * std::pow(std::norm(1.0 - ca * mesh.z[i]), ex);
        res.values[ia] = amp * s;
    }
    for (std::size_t ia = 0; ia < a_grid.size(); ++ia) {
        if (res.values[ia] > res.sup) {
            res.sup = res.values[ia];
            res.arg_sup = a_grid[ia];
        }
    }
    return res;
}

DecayProfile kernel_test_profile(const WeightedIntegrand& mu, double t,
                                 const std::vector<double>& radii, int angles_per_ring,
                                 const QuadratureSpec& spec) {
    std::vector<Complex> grid;
    for (double r : radii)
        for (int j = 0; j < angles_per_ring; ++j)
            grid.push_back(std::polar(r, 2.0 * kPi * j / angles_per_ring));
    // Probing at 1-|a| ~ 2^-m needs a mesh resolving annuli below |a| and an
    // angular step finer than 1-|a|, otherwise deep rings read artificially low.
    QuadratureSpec deep = spec;
    if (!radii.empty()) {
        const double rmax = *std::max_element(radii.begin(), radii.end());
        const int m = static_cast<int>(
            std::ceil(-std::log2(std::clamp(1.0 - rmax, 1e-12, 0.5))));
        deep.radial_levels = std::min(16, std::max(spec.radial_levels, m + 3));
        deep.max_angular =
            std::max(spec.max_angular, std::min(16384, 8 << std::min(m, 11)));
    }
    const auto kt = kernel_test(mu, t, grid, deep);
    DecayProfile prof;
    prof.radii = radii;
    prof.values.assign(radii.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::size_t ring = i / angles_per_ring;
        prof.values[ring] = std::max(prof.values[ring], kt.values[i]);
    }
    return prof;
}

double tpq_norm(const AnalyticFn& f, double p, double q, double alpha, double aperture,
                int eta_samples, const QuadratureSpec& spec) {
    if (!(p > 0) || !(q > 0) || !(alpha > -2))
        throw std::invalid_argument("tpq_norm needs 0 < p, q < inf and alpha > -2");
    WeightedIntegrand integ;
    integ.weight_exponent = alpha;
    integ.density = [&f, p](Complex z) { return abs_pow(evaluate(f, z), p); };
    auto inner = [&](double theta) {
        const Complex eta = std::polar(1.0, theta);
        auto region = [eta, aperture](Complex z) {
            return in_nontangential(z, eta, aperture);
        };
        const double v = region_integral_value(integ, region, spec);
        return std::pow(v, q / p);
    };
    return std::pow(boundary_integral(inner, eta_samples), 1.0 / q);
}

double tinfq_norm(const AnalyticFn& f, double q, double aperture, int eta_samples,
                  const QuadratureSpec& spec) {
    if (!(q > 0)) throw std::invalid_argument("tinfq_norm needs q > 0");
    const DiskMesh mesh = build_disk_mesh(spec, 0.0);
    const double cap = 1.0 - spec.boundary_margin;
    std::vector<Complex> pts;
    std::vector<double> mags;
    for (const auto& z : mesh.z) {
        if (std::abs(z) > cap) continue;
        pts.push_back(z);
        mags.push_back(std::abs(evaluate(f, z)));
    }
    auto inner = [&](double theta) {
        const Complex eta = std::polar(1.0, theta);
        double sup = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (mags[i] > sup && in_nontangential(pts[i], eta, aperture)) sup = mags[i];
        return std::pow(sup, q);
    };
    return std::pow(boundary_integral(inner, eta_samples), 1.0 / q);
}

double box_average(const AnalyticFn& f, double p, double alpha, Complex u,
                   const QuadratureSpec& spec) {
    WeightedIntegrand integ;
    integ.weight_exponent = alpha + 1.0;
    integ.density = [&f, p](Complex z) { return abs_pow(evaluate(f, z), p); };
    auto region = [u](Complex z) { return in_carleson_box(u, z); };
    return region_integral_value(integ, region, spec) / (1.0 - std::norm(u));
}

double tpinf_norm(const AnalyticFn& f, double p, double alpha,
                  const std::vector<Complex>& u_grid, const QuadratureSpec& spec) {
    if (!(p > 0) || !(alpha > -2))
        throw std::invalid_argument("tpinf_norm needs p > 0 and alpha > -2");
    double sup = 0.0;
    for (const auto& u : u_grid) sup = std::max(sup, box_average(f, p, alpha, u, spec));
    return std::pow(sup, 1.0 / p);
}

namespace {

WeightedIntegrand lp_integrand(const AnalyticFn& fn_deriv, double p, double alpha, int n) {
    WeightedIntegrand mu;
    mu.weight_exponent = n * p + alpha + 1.0;
    mu.density = [fn_deriv, p](Complex z) { return abs_pow(evaluate(fn_deriv, z), p); };
    return mu;
}

}  // namespace

double lp_norm(const AnalyticFn& f, double p, double alpha, int n, double t,
               const std::vector<Complex>& a_grid, const QuadratureSpec& spec) {
    if (!(p > 0) || !(alpha > -2) || n < 1)
        throw std::invalid_argument("lp_norm needs p > 0, alpha > -2, n >= 1");
    // Jet sum starting at order 0 (a constant would otherwise get norm 0 for n = 1).
    double jet = 0.0;
    for (int j = 0; j < n; ++j) jet += abs_pow(evaluate(derivative(f, j), 0.0), p);
    const auto mu = lp_integrand(derivative(f, n), p, alpha, n);
    const auto kt = kernel_test(mu, t, a_grid, spec);
    return std::pow(jet + kt.sup, 1.0 / p);
}

DecayProfile little_profile(const AnalyticFn& f, double p, double alpha, int n, double t,
                            const std::vector<double>& radii, const QuadratureSpec& spec) {
    const auto mu = lp_integrand(derivative(f, n), p, alpha, n);
    return kernel_test_profile(mu, t, radii, 8, spec);
}

double growth_ratio(const AnalyticFn& f, double p, double alpha, int n,
                    const std::vector<Complex>& z_samples, const QuadratureSpec& spec) {
    const double norm = lp_norm(f, p, alpha, n, alpha + 3.0, default_sup_grid(), spec);
    if (norm == 0.0) return 0.0;
    const AnalyticFn fn = derivative(f, n);
    const double e = (alpha + 2.0) / p + n;
    double sup = 0.0;
    for (const auto& z : z_samples)
        sup = std::max(sup, std::abs(evaluate(fn, z)) * std::pow(1.0 - std::norm(z), e));
    return sup / norm;
}

double seq_tent_norm(const std::vector<Complex>& x, const Lattice& Z, double p,
                     const std::vector<Complex>& u_grid) {
    if (x.size() != Z.nodes.size())
        throw std::invalid_argument("sequence length must match lattice size");
    double sup = 0.0;
    for (const auto& u : u_grid) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (in_carleson_box(u, Z.nodes[j]))
                s += abs_pow(x[j], p) * (1.0 - std::norm(Z.nodes[j]));
        sup = std::max(sup, s / (1.0 - std::norm(u)));
    }
    return std::pow(sup, 1.0 / p);
}

DecayProfile seq_little_profile(const std::vector<Complex>& x, const Lattice& Z, double p,
                                const std::vector<double>& radii, int angles_per_ring) {
    if (x.size() != Z.nodes.size())
        throw std::invalid_argument("sequence length must match lattice size");
    DecayProfile prof;
    prof.radii = radii;
    for (double r : radii) {
        double ring_max = 0.0;
        for (int j = 0; j < angles_per_ring; ++j) {
            const Complex u = std::polar(r, 2.0 * kPi * j / angles_per_ring);
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (in_carleson_box(u, Z.nodes[i]))
                    s += abs_pow(x[i], p) * (1.0 - std::norm(Z.nodes[i]));
            ring_max = std::max(ring_max, s / (1.0 - std::norm(u)));
        }
        prof.values.push_back(ring_max);
    }
    return prof;
}

}  // namespace tentops
