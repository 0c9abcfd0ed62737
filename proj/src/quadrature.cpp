#include "tentops/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tentops {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuadratureSpec QuadratureSpec::refined() const {
    QuadratureSpec s = *this;
    s.radial_levels += 2;
    s.angular_base *= 2;
    s.max_angular *= 2;
    s.gauss_points += 2;
    return s;
}

QuadratureSpec QuadratureSpec::coarsened() const {
    QuadratureSpec s = *this;
    s.angular_base = std::max(8, s.angular_base / 2);
    s.max_angular = std::max(64, s.max_angular / 2);
    s.gauss_points = std::max(3, s.gauss_points - 2);
    return s;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-based initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

namespace {

int angular_count(const QuadratureSpec& spec, int level) {
    const long long n = static_cast<long long>(spec.angular_base) << std::max(0, level - 1);
    return static_cast<int>(std::min<long long>(n, spec.max_angular));
}

}  // namespace

DiskMesh build_disk_mesh(const QuadratureSpec& spec, double gamma) {
    if (gamma <= -1.0) throw std::invalid_argument("weight exponent must exceed -1");
    if (spec.radial_levels < 8) throw std::invalid_argument("radial_levels must be >= 8");

    std::vector<double> gl_x, gl_w;
    gauss_legendre(spec.gauss_points, gl_x, gl_w);

    DiskMesh mesh;
    mesh.gamma = gamma;
    mesh.block_offset.push_back(0);

    // Dyadic annuli [1-2^-(m-1), 1-2^-m], m = 1..radial_levels, innermost starts at 0.
    for (int m = 1; m <= spec.radial_levels; ++m) {
        const double r0 = (m == 1) ? 0.0 : 1.0 - std::ldexp(1.0, -(m - 1));
        const double r1 = 1.0 - std::ldexp(1.0, -m);
        const int ntheta = angular_count(spec, m);
        const double mid = 0.5 * (r0 + r1), half = 0.5 * (r1 - r0);
        for (int i = 0; i < spec.gauss_points; ++i) {
            const double r = mid + half * gl_x[i];
            const double wr = gl_w[i] * half * r * std::pow(1.0 - r * r, gamma);
            const double w = 2.0 * wr / ntheta;  // (1/pi) * (2*pi/ntheta)
            for (int j = 0; j < ntheta; ++j) {
                const double theta = 2.0 * kPi * (j + 0.5) / ntheta;
                mesh.z.push_back(std::polar(r, theta));
                mesh.weight.push_back(w);
            }
        }
        mesh.block_offset.push_back(mesh.z.size());
    }

    // Closing annulus [1-2^-radial_levels, 1): substitute v = (1-r^2)^(gamma+1) so the
    // weight is absorbed exactly and no node touches the boundary.
    {
        const double r0 = 1.0 - std::ldexp(1.0, -spec.radial_levels);
        const double v0 = std::pow(1.0 - r0 * r0, gamma + 1.0);
        const int ntheta = spec.max_angular;
        for (int i = 0; i < spec.gauss_points; ++i) {
            const double v = 0.5 * v0 * (1.0 + gl_x[i]);
            const double r = std::sqrt(1.0 - std::pow(v, 1.0 / (gamma + 1.0)));
            const double w = gl_w[i] * v0 / (2.0 * ntheta * (gamma + 1.0));
            for (int j = 0; j < ntheta; ++j) {
                const double theta = 2.0 * kPi * (j + 0.5) / ntheta;
                mesh.z.push_back(std::polar(r, theta));
                mesh.weight.push_back(w);
            }
        }
        mesh.block_offset.push_back(mesh.z.size());
    }
    return mesh;
}

double integrate_mesh_serial(const DiskMesh& mesh,
                            const std::function<double(Complex)>& density) {
    double total = 0.0;
    for (std::size_t b = 0; b + 1 < mesh.block_offset.size(); ++b) {
        double partial = 0.0;
        for (std::size_t i = mesh.block_offset[b]; i < mesh.block_offset[b + 1]; ++i)
            partial += mesh.weight[i] * density(mesh.z[i]);
        total += partial;
    }
    return total;
}

double integrate_mesh(const DiskMesh& mesh,
                      const std::function<double(Complex)>& density) {
    const std::size_t nblocks = mesh.block_offset.size() - 1;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t b = 0; b < nblocks; ++b) {
        double s = 0.0;
        for (std::size_t i = mesh.block_offset[b]; i < mesh.block_offset[b + 1]; ++i)
            s += mesh.weight[i] * density(mesh.z[i]);
        partial[b] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

std::vector<double> weighted_density(const DiskMesh& mesh,
                                     const std::function<double(Complex)>& density) {
    std::vector<double> out(mesh.z.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < mesh.z.size(); ++i)
        out[i] = mesh.weight[i] * density(mesh.z[i]);
    return out;
}

IntegralResult disk_integral(const WeightedIntegrand& f, const QuadratureSpec& spec) {
    const DiskMesh fine = build_disk_mesh(spec, f.weight_exponent);
    const DiskMesh coarse = build_disk_mesh(spec.coarsened(), f.weight_exponent);
    IntegralResult res;
    res.value = integrate_mesh(fine, f.density);
    res.error = std::abs(res.value - integrate_mesh(coarse, f.density));
    res.converged = res.error <= std::max(spec.target_rel_err * std::abs(res.value), 1e-14);
    return res;
}

namespace {

struct PolarCell {
    double r0, r1, t0, t1;
    bool closing;  // coordinates are (v, theta) in the closing annulus
};

class RegionIntegrator {
public:
    RegionIntegrator(const WeightedIntegrand& f, const std::function<bool(Complex)>& region,
                     double gamma)
        : f_(f), region_(region), gamma_(gamma) {}

    // Radial primitive of 2 r (1-r^2)^gamma over [r0, r1].
    double radial_mass(double r0, double r1) const {
        const double g1 = gamma_ + 1.0;
        return (std::pow(1.0 - r0 * r0, g1) - std::pow(1.0 - r1 * r1, g1)) / (2.0 * g1);
    }

    double cell_weight(const PolarCell& c) const {
        const double dt = c.t1 - c.t0;
        if (c.closing) return dt * (c.r1 - c.r0) / (2.0 * kPi * (gamma_ + 1.0));
        return dt * radial_mass(c.r0, c.r1) / kPi;
    }

    Complex cell_point(const PolarCell& c, double fr, double ft) const {
        const double theta = c.t0 + ft * (c.t1 - c.t0);
        double r;
        if (c.closing) {
            const double v = c.r0 + fr * (c.r1 - c.r0);
            r = std::sqrt(1.0 - std::pow(v, 1.0 / (gamma_ + 1.0)));
        } else {
            r = c.r0 + fr * (c.r1 - c.r0);
        }
        return std::polar(r, theta);
    }

    double visit(const PolarCell& c, int depth) const {
        const Complex center = cell_point(c, 0.5, 0.5);
        int inside = 0, total = 0;
        const double probes[3] = {0.02, 0.5, 0.98};
        for (double fr : probes)
            for (double ft : probes) {
                ++total;
                if (region_(cell_point(c, fr, ft))) ++inside;
            }
        if (inside == total) return cell_weight(c) * f_.density(center);
        if (inside == 0) return 0.0;
        if (depth >= max_depth_) {
            // fractional occupancy of the straddling leaf
            return cell_weight(c) * f_.density(center) * inside / total;
        }
        const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
        double s = 0.0;
        s += visit({c.r0, rm, c.t0, tm, c.closing}, depth + 1);
        s += visit({c.r0, rm, tm, c.t1, c.closing}, depth + 1);
        s += visit({rm, c.r1, c.t0, tm, c.closing}, depth + 1);
        s += visit({rm, c.r1, tm, c.t1, c.closing}, depth + 1);
        return s;
    }

private:
    const WeightedIntegrand& f_;
    const std::function<bool(Complex)>& region_;
    double gamma_;
    int max_depth_ = 4;
};

double region_integral_on(const WeightedIntegrand& f,
                          const std::function<bool(Complex)>& region,
                          const QuadratureSpec& spec, int radial_cells) {
    RegionIntegrator integ(f, region, f.weight_exponent);
    std::vector<PolarCell> cells;
    for (int m = 1; m <= spec.radial_levels; ++m) {
        const double a0 = (m == 1) ? 0.0 : 1.0 - std::ldexp(1.0, -(m - 1));
        const double a1 = 1.0 - std::ldexp(1.0, -m);
        const int ntheta = angular_count(spec, m);
        for (int i = 0; i < radial_cells; ++i) {
            const double r0 = a0 + (a1 - a0) * i / radial_cells;
            const double r1 = a0 + (a1 - a0) * (i + 1) / radial_cells;
            for (int j = 0; j < ntheta; ++j)
                cells.push_back({r0, r1, 2.0 * kPi * j / ntheta,
                                 2.0 * kPi * (j + 1) / ntheta, false});
        }
    }
    {
        const double r0 = 1.0 - std::ldexp(1.0, -spec.radial_levels);
        const double v0 = std::pow(1.0 - r0 * r0, f.weight_exponent + 1.0);
        const int ntheta = spec.max_angular;
        for (int i = 0; i < radial_cells; ++i) {
            const double u0 = v0 * i / radial_cells;
            const double u1 = v0 * (i + 1) / radial_cells;
            for (int j = 0; j < ntheta; ++j)
                cells.push_back({u0, u1, 2.0 * kPi * j / ntheta,
                                 2.0 * kPi * (j + 1) / ntheta, true});
        }
    }
    std::vector<double> partial(cells.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::size_t i = 0; i < cells.size(); ++i) partial[i] = integ.visit(cells[i], 0);
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace

double region_integral_value(const WeightedIntegrand& f,
                             const std::function<bool(Complex)>& region,
                             const QuadratureSpec& spec) {
    return region_integral_on(f, region, spec, 4);
}

IntegralResult region_integral(const WeightedIntegrand& f,
                               const std::function<bool(Complex)>& region,
                               const QuadratureSpec& spec) {
    IntegralResult res;
    res.value = region_integral_on(f, region, spec, 4);
    const double coarse = region_integral_on(f, region, spec.coarsened(), 4);
    res.error = std::abs(res.value - coarse);
    res.converged = res.error <= std::max(spec.target_rel_err * std::abs(res.value), 1e-14);
    return res;
}

double boundary_integral(const std::function<double(double)>& h, int samples) {
    if (samples < 64) throw std::invalid_argument("boundary integral needs >= 64 samples");
    std::vector<double> partial(samples);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < samples; ++j) partial[j] = h(2.0 * kPi * j / samples);
    double s = 0.0;
    for (double p : partial) s += p;
    return s * 2.0 * kPi / samples;
}

double forelli_rudin_check(Complex a, Complex b, double s, double r, double t,
                           const QuadratureSpec& spec) {
    if (!(s > -1.0) || !(r > 0.0) || !(t > 0.0) || !(r + t - s - 2.0 > 0.0) ||
        !(r < s + 2.0) || !(s + 2.0 < t))
        throw std::invalid_argument("Forelli-Rudin hypotheses violated");
    WeightedIntegrand f;
    f.weight_exponent = s;
    const Complex ca = std::conj(a), cb = std::conj(b);
    f.density = [=](Complex z) {
        return std::pow(std::norm(1.0 - ca * z), -0.5 * r) *
               std::pow(std::norm(1.0 - cb * z), -0.5 * t);
    };
    const double lhs = disk_integral(f, spec).value;
    const double rhs = 1.0 / (std::pow(std::abs(1.0 - ca * b), r) *
                              std::pow(1.0 - std::norm(b), t - s - 2.0));
    return lhs / rhs;
}

}  // namespace tentops
