#pragma once

#include <string>
#include <vector>

#include "tentops/operators.hpp"
#include "tentops/tentnorm.hpp"

namespace tentops {

enum class CriterionKind {
    Ug,
    UgVanishing,
    TentMembership,
    TentLittleMembership,
    SgSup,
    SgVanishing,
    SgMembership,
    SgLittle,
};

enum class Classification { bounded, not_bounded, compact, not_compact, inconclusive };

std::string to_string(CriterionKind k);
std::string to_string(Classification c);

/// Weight exponent of the sup criterion: n-k+(beta+2)/q-(alpha+2)/p for T-kind,
/// (beta+2)/q-(alpha+2)/p for S-kind (k = 0, the criterion involves g itself).
double exponent_e(const SpaceParams& params);

/// lambda = (p*beta - q*alpha)/(p-q); only defined for q < p, rejected when <= -2.
double lambda_param(const SpaceParams& params);

/// Grid sup of |g^(d)(z)| (1-|z|^2)^e with d = n-k (T) or 0 (S).
double U_g(const AnalyticFn& g, const SpaceParams& params,
           const std::vector<Complex>& z_grid);

/// Annulus maxima of the U_g quantity at |z| = radii.
DecayProfile U_g_profile(const AnalyticFn& g, const SpaceParams& params,
                         const std::vector<double>& radii, int angles_per_ring);

/// Kernel-test sup of |g^(d)|^(pq/(p-q)) (1-|z|^2)^(d*pq/(p-q)+lambda+1), power
/// (p-q)/(pq); the tent-space membership criterion for q < p.
double membership_value(const AnalyticFn& g, const SpaceParams& params, double t,
                        const std::vector<Complex>& a_grid, const QuadratureSpec& spec);

DecayProfile membership_profile(const AnalyticFn& g, const SpaceParams& params, double t,
                                const std::vector<double>& radii,
                                const QuadratureSpec& spec);

struct ClassifyConfig {
    double t = 3.0;
    QuadratureSpec spec;
    int profile_levels = 10;  // annuli radii 1-2^-m, m = 1..profile_levels
    int angles_per_ring = 8;
    int compact_levels = 8;   // compactness decay evidence along |z_j| = 1-2^-m
    bool with_evidence = true;
};

struct Verdict {
    SpaceParams params;
    CriterionKind criterion_kind = CriterionKind::Ug;
    double criterion_value = 0.0;
    DecayProfile profile;              // annulus maxima of the governing criterion
    Classification boundedness = Classification::inconclusive;
    Classification compactness = Classification::inconclusive;
    std::string note;
    RatioTable evidence;               // corpus ratios (empty when not requested)
    std::vector<double> compact_decay; // image/source ratios on the compactness family
};

/// Finiteness is undecidable from samples; the profile-shape rules are:
/// not_bounded when the last four annulus maxima increase monotonically and the
/// final value is >= 2x the first; bounded when they are non-increasing; compact
/// when the final value is <= 0.05x the profile maximum, not_compact when >= 0.5x.
Classification classify_boundedness(const DecayProfile& profile);
Classification classify_compactness(const DecayProfile& profile);

Verdict classify(const AnalyticFn& g, const SpaceParams& params,
                 const std::vector<AnalyticFn>& corpus, const ClassifyConfig& config);

std::string verdict_to_json(const Verdict& v, const AnalyticFn& g);

}  // namespace tentops
