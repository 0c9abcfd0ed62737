#include "tentops/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace tentops {

namespace {

void check_orders(int n, int k) {
    if (n < 1 || k < 0 || k >= n)
        throw std::invalid_argument("operator orders must satisfy 0 <= k < n");
}

double abs_pow(Complex v, double p) { return std::pow(std::norm(v), 0.5 * p); }

}  // namespace

AnalyticFn apply_T(const AnalyticFn& f, const AnalyticFn& g, int n, int k, int degree) {
    check_orders(n, k);
    return integrate_n(product(derivative(f, k), derivative(g, n - k), degree), n, degree);
}

AnalyticFn apply_S(const AnalyticFn& f, const AnalyticFn& g, int n, int k, int degree) {
    check_orders(n, k);
    return integrate_n(product(derivative(f, n - k), derivative(g, k), degree), n, degree);
}

double image_lp_norm(const AnalyticFn& f, const AnalyticFn& g, const SpaceParams& params,
                     double t, const std::vector<Complex>& a_grid,
                     const QuadratureSpec& spec) {
    params.validate();
    const int f_order = params.op_kind == OpKind::T ? params.k : params.n - params.k;
    const int g_order = params.op_kind == OpKind::T ? params.n - params.k : params.k;
    const AnalyticFn fd = derivative(f, f_order);
    const AnalyticFn gd = derivative(g, g_order);
    const double q = params.q;
    WeightedIntegrand mu;
    mu.weight_exponent = params.n * q + params.beta + 1.0;
    mu.density = [fd, gd, q](Complex z) {
        return abs_pow(evaluate(fd, z), q) * abs_pow(evaluate(gd, z), q);
    };
    return std::pow(kernel_test(mu, t, a_grid, spec).sup, 1.0 / q);
}

double source_lp_norm(const AnalyticFn& f, const SpaceParams& params, double t,
                      const std::vector<Complex>& a_grid, const QuadratureSpec& spec) {
    const int m = std::max(1, params.op_kind == OpKind::T ? params.k : params.n - params.k);
    return lp_norm(f, params.p, params.alpha, m, t, a_grid, spec);
}

RatioTable empirical_ratio(const AnalyticFn& g, const SpaceParams& params,
                           const std::vector<AnalyticFn>& corpus, double t,
                           const std::vector<Complex>& a_grid,
                           const QuadratureSpec& spec) {
    params.validate();
    if (corpus.empty()) throw std::invalid_argument("empirical_ratio needs a nonempty corpus");
    RatioTable table;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        RatioEntry e;
        e.corpus_index = i;
        e.source_norm = source_lp_norm(corpus[i], params, t, a_grid, spec);
        if (e.source_norm <= 0)
            throw std::invalid_argument("corpus function has non-positive source norm");
        e.image_norm = image_lp_norm(corpus[i], g, params, t, a_grid, spec);
        e.ratio = e.image_norm / e.source_norm;
        table.max_ratio = std::max(table.max_ratio, e.ratio);
        table.entries.push_back(e);
    }
    return table;
}

}  // namespace tentops
