#pragma once

#include <vector>

#include "tentops/funcmodel.hpp"
#include "tentops/tentnorm.hpp"

namespace tentops {

/// T_g^{n,k} f = I^n(f^(k) g^(n-k)).
AnalyticFn apply_T(const AnalyticFn& f, const AnalyticFn& g, int n, int k, int degree);

/// S_g^{n,k} f = I^n(f^(n-k) g^(k)); coincides with T_g^{n,n-k} for k >= 1.
AnalyticFn apply_S(const AnalyticFn& f, const AnalyticFn& g, int n, int k, int degree);

/// Littlewood-Paley surrogate for the image norm: kernel-test sup of
/// |f^(k)|^q |g^(n-k)|^q (1-|z|^2)^(nq+beta+1) (T-kind; S-kind swaps the derivative
/// orders), power 1/q. The image's Taylor jet vanishes by construction, so no
/// antiderivative is ever computed.
double image_lp_norm(const AnalyticFn& f, const AnalyticFn& g, const SpaceParams& params,
                     double t, const std::vector<Complex>& a_grid,
                     const QuadratureSpec& spec);

/// Source-space surrogate norm matching image_lp_norm's conventions.
double source_lp_norm(const AnalyticFn& f, const SpaceParams& params, double t,
                      const std::vector<Complex>& a_grid, const QuadratureSpec& spec);

struct RatioEntry {
    std::size_t corpus_index = 0;
    double source_norm = 0.0;
    double image_norm = 0.0;
    double ratio = 0.0;
};

struct RatioTable {
    std::vector<RatioEntry> entries;
    double max_ratio = 0.0;
};

/// Empirical stand-in for the operator norm: max over the corpus of
/// image_lp_norm / source_lp_norm. Throws on an empty corpus.
RatioTable empirical_ratio(const AnalyticFn& g, const SpaceParams& params,
                           const std::vector<AnalyticFn>& corpus, double t,
                           const std::vector<Complex>& a_grid, const QuadratureSpec& spec);

}  // namespace tentops
