#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "tentops/corpus.hpp"
#include "tentops/criteria.hpp"

using namespace tentops;

TEST_CASE("criterion exponent") {
    SpaceParams p;  // p=q=2, alpha=beta=0, n=1, k=0, T
    CHECK(exponent_e(p) == doctest::Approx(1.0));
    p.op_kind = OpKind::S;
    CHECK(exponent_e(p) == doctest::Approx(0.0));
    p.op_kind = OpKind::T;
    p.n = 2;
    p.k = 1;
    CHECK(exponent_e(p) == doctest::Approx(1.0));
    p.q = 1.0;
    CHECK(exponent_e(p) == doctest::Approx(2.0));
}

TEST_CASE("lambda parameter") {
    SpaceParams p;
    p.p = 2.0;
    p.q = 1.0;
    CHECK(lambda_param(p) == doctest::Approx(0.0));
    p.alpha = 1.0;
    p.beta = 1.0;
    CHECK(lambda_param(p) == doctest::Approx(1.0));
    p.q = 2.0;
    CHECK_THROWS_AS((void)lambda_param(p), std::invalid_argument);  // q = p
    p.q = 1.0;
    p.alpha = 4.0;
    p.beta = 0.0;
    CHECK_THROWS_AS((void)lambda_param(p), std::invalid_argument);  // lambda <= -2
}

TEST_CASE("U_g of g = z is exactly 1") {
    SpaceParams params;
    // |g'| (1-|z|^2)^1 = 1-|z|^2, maximized at the origin
    CHECK(U_g(AnalyticFn::monomial(1), params, default_sup_grid()) ==
          doctest::Approx(1.0));
    const auto prof = U_g_profile(AnalyticFn::monomial(1), params, dyadic_radii(6), 8);
    CHECK(prof.values.front() == doctest::Approx(0.75));
    CHECK(classify_compactness(prof) == Classification::compact);
}

TEST_CASE("profile shape rules") {
    DecayProfile grow{{0.5, 0.75, 0.875, 0.9375, 0.96875}, {1, 2, 4, 8, 16}};
    CHECK(classify_boundedness(grow) == Classification::not_bounded);
    CHECK(classify_compactness(grow) == Classification::not_compact);
    DecayProfile flat{{0.5, 0.75, 0.875, 0.9375, 0.96875}, {3, 3, 3, 3, 3}};
    CHECK(classify_boundedness(flat) == Classification::bounded);
    CHECK(classify_compactness(flat) == Classification::not_compact);
    DecayProfile dec{{0.5, 0.75, 0.875, 0.9375, 0.96875}, {1, 0.5, 0.1, 0.02, 0.004}};
    CHECK(classify_boundedness(dec) == Classification::bounded);
    CHECK(classify_compactness(dec) == Classification::compact);
    DecayProfile short_p{{0.5}, {1.0}};
    CHECK(classify_boundedness(short_p) == Classification::inconclusive);
}

TEST_CASE("membership value separates tame and critical symbols") {
    SpaceParams params;
    params.p = 2.0;
    params.q = 1.0;
    QuadratureSpec spec;
    const auto grid = default_sup_grid();
    const double tame = membership_value(AnalyticFn::monomial(1), params, 3.0, grid,
                                         spec);
    CHECK(tame > 0.0);
    CHECK(std::isfinite(tame));
    const auto prof_tame =
        membership_profile(AnalyticFn::monomial(1), params, 3.0, dyadic_radii(8), spec);
    CHECK(classify_compactness(prof_tame) == Classification::compact);
    const auto prof_crit = membership_profile(membership_critical_symbol().fn, params,
                                              3.0, dyadic_radii(8), spec);
    CHECK(prof_crit.final_value() > 0.05 * prof_crit.max_value());
}

TEST_CASE("classify: bounded and compact symbol") {
    ClassifyConfig cc;
    cc.with_evidence = false;
    SpaceParams params;
    const Verdict v = classify(AnalyticFn::monomial(1), params, {}, cc);
    CHECK(v.boundedness == Classification::bounded);
    CHECK(v.compactness == Classification::compact);
    CHECK(v.criterion_value == doctest::Approx(1.0));
    CHECK(v.criterion_kind == CriterionKind::Ug);
}

TEST_CASE("classify: divergent symbol") {
    ClassifyConfig cc;
    cc.with_evidence = false;
    SpaceParams params;
    // g' = (1-z)^-1.5, annulus maxima grow like (1-r)^-0.5
    const Verdict v = classify(AnalyticFn::kernel(1.0, 0.5, 2.0), params, {}, cc);
    CHECK(v.boundedness == Classification::not_bounded);
    CHECK(v.compactness == Classification::not_compact);
}

TEST_CASE("classify: zero operator and negative exponent shortcuts") {
    ClassifyConfig cc;
    cc.with_evidence = false;
    SpaceParams params;
    const Verdict vz = classify(AnalyticFn::constant(4.0), params, {}, cc);
    CHECK(vz.boundedness == Classification::bounded);
    CHECK(vz.compactness == Classification::compact);
    CHECK(!vz.note.empty());

    SpaceParams neg;  // e = 1 + (0+2)/2 - (2+2)/1 = -2
    neg.alpha = 2.0;
    neg.p = 1.0;
    const Verdict vn = classify(AnalyticFn::monomial(1), neg, {}, cc);
    CHECK(vn.boundedness == Classification::not_bounded);
    CHECK(!vn.note.empty());
}

TEST_CASE("classify with evidence populates the tables") {
    ClassifyConfig cc;
    cc.spec = QuadratureSpec{.radial_levels = 8, .angular_base = 16,
                             .max_angular = 256, .gauss_points = 4};
    cc.compact_levels = 3;
    SpaceParams params;
    const std::vector<AnalyticFn> corpus{AnalyticFn::constant(1.0),
                                         AnalyticFn::kernel(0.5, 1.0)};
    const Verdict v = classify(AnalyticFn::monomial(1), params, corpus, cc);
    CHECK(v.evidence.entries.size() == 2);
    CHECK(v.compact_decay.size() == 3);
    const std::string js = verdict_to_json(v, AnalyticFn::monomial(1));
    CHECK(js.find("\"boundedness\": \"bounded\"") != std::string::npos);
}

TEST_CASE("enum names") {
    CHECK(to_string(Classification::not_bounded) == "not_bounded");
    CHECK(to_string(CriterionKind::TentMembership) == "tent_membership");
}
