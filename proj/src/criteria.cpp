#include "tentops/criteria.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace tentops {

namespace {

constexpr double kPi = std::numbers::pi;

int criterion_derivative_order(const SpaceParams& params) {
    return params.op_kind == OpKind::T ? params.n - params.k : 0;
}

double abs_pow(Complex v, double p) { return std::pow(std::norm(v), 0.5 * p); }

}  // namespace

std::string to_string(CriterionKind k) {
    switch (k) {
        case CriterionKind::Ug: return "Ug";
        case CriterionKind::UgVanishing: return "Ug_vanishing";
        case CriterionKind::TentMembership: return "tent_membership";
        case CriterionKind::TentLittleMembership: return "tent_little_membership";
        case CriterionKind::SgSup: return "Sg_sup";
        case CriterionKind::SgVanishing: return "Sg_vanishing";
        case CriterionKind::SgMembership: return "Sg_membership";
        case CriterionKind::SgLittle: return "Sg_little";
    }
    return "?";
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::bounded: return "bounded";
        case Classification::not_bounded: return "not_bounded";
        case Classification::compact: return "compact";
        case Classification::not_compact: return "not_compact";
        case Classification::inconclusive: return "inconclusive";
    }
    return "?";
}

double exponent_e(const SpaceParams& params) {
    params.validate();
    const double base = (params.beta + 2.0) / params.q - (params.alpha + 2.0) / params.p;
    if (params.op_kind == OpKind::S) return base;
    return params.n - params.k + base;
}

double lambda_param(const SpaceParams& params) {
    params.validate();
    if (!(params.q < params.p))
        throw std::invalid_argument("lambda is defined only for q < p");
    const double lambda =
        (params.p * params.beta - params.q * params.alpha) / (params.p - params.q);
    if (!(lambda > -2.0))
        throw std::invalid_argument("hypothesis (p*beta-q*alpha)/(p-q) > -2 violated");
    return lambda;
}

double U_g(const AnalyticFn& g, const SpaceParams& params,
           const std::vector<Complex>& z_grid) {
    const AnalyticFn gd = derivative(g, criterion_derivative_order(params));
    const double e = exponent_e(params);
    double sup = 0.0;
    for (const auto& z : z_grid)
        sup = std::max(sup, std::abs(evaluate(gd, z)) * std::pow(1.0 - std::norm(z), e));
    return sup;
}

DecayProfile U_g_profile(const AnalyticFn& g, const SpaceParams& params,
                         const std::vector<double>& radii, int angles_per_ring) {
    const AnalyticFn gd = derivative(g, criterion_derivative_order(params));
    const double e = exponent_e(params);
    DecayProfile prof;
    prof.radii = radii;
    for (double r : radii) {
        const double w = std::pow(1.0 - r * r, e);
        double ring_max = 0.0;
        for (int j = 0; j < angles_per_ring; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / angles_per_ring);
            ring_max = std::max(ring_max, std::abs(evaluate(gd, z)) * w);
        }
        prof.values.push_back(ring_max);
    }
    return prof;
}

namespace {

WeightedIntegrand membership_integrand(const AnalyticFn& g, const SpaceParams& params) {
    const int d = criterion_derivative_order(params);
    const double lambda = lambda_param(params);
    const double s = params.p * params.q / (params.p - params.q);
    const AnalyticFn gd = derivative(g, d);
    WeightedIntegrand mu;
    mu.weight_exponent = d * s + lambda + 1.0;
    mu.density = [gd, s](Complex z) { return abs_pow(evaluate(gd, z), s); };
    return mu;
}

}  // namespace

double membership_value(const AnalyticFn& g, const SpaceParams& params, double t,
                        const std::vector<Complex>& a_grid, const QuadratureSpec& spec) {
    const double s = params.p * params.q / (params.p - params.q);
    const auto mu = membership_integrand(g, params);
    return std::pow(kernel_test(mu, t, a_grid, spec).sup, 1.0 / s);
}

DecayProfile membership_profile(const AnalyticFn& g, const SpaceParams& params, double t,
                                const std::vector<double>& radii,
                                const QuadratureSpec& spec) {
    const auto mu = membership_integrand(g, params);
    return kernel_test_profile(mu, t, radii, 8, spec);
}

Classification classify_boundedness(const DecayProfile& profile) {
    const auto& v = profile.values;
    if (v.size() < 4) return Classification::inconclusive;
    bool increasing = true, non_increasing = true;
    for (std::size_t i = v.size() - 4; i + 1 < v.size(); ++i) {
        if (!(v[i + 1] > v[i])) increasing = false;
        if (v[i + 1] > v[i] * (1.0 + 1e-9)) non_increasing = false;
    }
    if (increasing && v.front() > 0 && v.back() >= 2.0 * v.front())
        return Classification::not_bounded;
    if (non_increasing) return Classification::bounded;
    return Classification::inconclusive;
}

Classification classify_compactness(const DecayProfile& profile) {
    const double m = profile.max_value();
    if (m == 0.0) return Classification::compact;
    const double f = profile.final_value();
    if (f <= 0.05 * m) return Classification::compact;
    if (f >= 0.5 * m) return Classification::not_compact;
    return Classification::inconclusive;
}

Verdict classify(const AnalyticFn& g, const SpaceParams& params,
                 const std::vector<AnalyticFn>& corpus, const ClassifyConfig& config) {
    params.validate();
    Verdict v;
    v.params = params;

    const bool sup_case = params.p <= params.q;
    const bool t_kind = params.op_kind == OpKind::T;
    v.criterion_kind = sup_case ? (t_kind ? CriterionKind::Ug : CriterionKind::SgSup)
                                : (t_kind ? CriterionKind::TentMembership
                                          : CriterionKind::SgMembership);

    const auto radii = dyadic_radii(config.profile_levels);
    const AnalyticFn gd = derivative(g, criterion_derivative_order(params));

    if (gd.is_zero()) {
        v.boundedness = Classification::bounded;
        v.compactness = Classification::compact;
        v.note = "criterion derivative of g vanishes identically; the operator is zero";
        return v;
    }

    if (sup_case) {
        const auto grid = default_sup_grid(config.profile_levels, config.angles_per_ring);
        v.criterion_value = U_g(g, params, grid);
        v.profile = U_g_profile(g, params, radii, config.angles_per_ring);
        if (exponent_e(params) < 0) {
            v.boundedness = Classification::not_bounded;
            v.note = "criterion exponent is negative: a finite sup would force the "
                     "criterion derivative of g to vanish identically";
        } else {
            v.boundedness = classify_boundedness(v.profile);
        }
    } else {
        v.criterion_value = membership_value(g, params, config.t,
                                             default_sup_grid(config.profile_levels,
                                                              config.angles_per_ring),
                                             config.spec);
        v.profile = membership_profile(g, params, config.t, radii, config.spec);
        v.boundedness = classify_boundedness(v.profile);
    }
    v.compactness = classify_compactness(v.profile);

    if (config.with_evidence && !corpus.empty()) {
        v.evidence = empirical_ratio(g, params, corpus,
                                     config.t, default_sup_grid(), config.spec);
        for (int m = 1; m <= config.compact_levels; ++m) {
            const Complex zj{1.0 - std::ldexp(1.0, -m), 0.0};
            const AnalyticFn fj = test_fn_compactness(zj, params.p, params.alpha);
            const double src = source_lp_norm(fj, params, config.t, default_sup_grid(),
                                              config.spec);
            const double img = image_lp_norm(fj, g, params, config.t, default_sup_grid(),
                                             config.spec);
            v.compact_decay.push_back(src > 0 ? img / src : 0.0);
        }
    }
    return v;
}

std::string verdict_to_json(const Verdict& v, const AnalyticFn& g) {
    nlohmann::json j;
    j["g"] = nlohmann::json::parse(analytic_fn_to_json(g));
    j["params"] = {{"p", v.params.p},      {"q", v.params.q},
                   {"alpha", v.params.alpha}, {"beta", v.params.beta},
                   {"n", v.params.n},      {"k", v.params.k},
                   {"op", v.params.op_kind == OpKind::T ? "T" : "S"}};
    j["criterion"] = to_string(v.criterion_kind);
    j["value"] = v.criterion_value;
    j["profile"] = {{"radii", v.profile.radii}, {"values", v.profile.values}};
    j["classification"] = {{"boundedness", to_string(v.boundedness)},
                           {"compactness", to_string(v.compactness)}};
    if (!v.note.empty()) j["note"] = v.note;
    nlohmann::json evidence;
    if (!v.evidence.entries.empty()) {
        nlohmann::json table = nlohmann::json::array();
        for (const auto& e : v.evidence.entries)
            table.push_back({{"f", e.corpus_index},
                             {"source_norm", e.source_norm},
                             {"image_norm", e.image_norm},
                             {"ratio", e.ratio}});
        evidence["corpus_ratios"] = table;
        evidence["max_ratio"] = v.evidence.max_ratio;
    }
    if (!v.compact_decay.empty()) evidence["compact_decay"] = v.compact_decay;
    j["evidence"] = evidence;
    return j.dump(2);
}

}  // namespace tentops
