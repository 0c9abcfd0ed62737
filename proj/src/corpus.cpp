#include "tentops/corpus.hpp"

#include <cmath>
#include <cstdint>
#include <random>

#include "tentops/atomic.hpp"

namespace tentops {

std::vector<Complex> deterministic_coefficients(std::size_t count, unsigned stream) {
    std::mt19937 rng(0x5eed0000u + stream);
    std::vector<Complex> x(count);
    for (auto& c : x) {
        // raw engine draws; avoids implementation-defined distributions
        const double re = (static_cast<double>(rng()) / 4294967296.0) * 2.0 - 1.0;
        const double im = (static_cast<double>(rng()) / 4294967296.0) * 2.0 - 1.0;
        c = {re, im};
    }
    return x;
}

std::vector<NamedFn> standard_corpus(const Lattice& lattice) {
    std::vector<NamedFn> corpus;
    corpus.push_back({"const_1", AnalyticFn::constant(1.0)});
    corpus.push_back({"mono_z", AnalyticFn::monomial(1)});
    corpus.push_back({"mono_z4", AnalyticFn::monomial(4)});
    corpus.push_back({"kernel_05_s1", AnalyticFn::kernel(0.5, 1.0)});
    corpus.push_back({"kernel_05_s2", AnalyticFn::kernel(0.5, 2.0)});
    corpus.push_back({"kernel_09_s1", AnalyticFn::kernel(0.9, 1.0)});
    corpus.push_back({"kernel_09_s2", AnalyticFn::kernel(0.9, 2.0)});
    corpus.push_back({"kernel_099_s1", AnalyticFn::kernel(0.99, 1.0)});
    corpus.push_back({"kernel_099_s2", AnalyticFn::kernel(0.99, 2.0)});
    corpus.push_back({"log_09", AnalyticFn::log_kernel(0.9)});
    const double L = default_synthesis_exponent(2.0);
    corpus.push_back({"synth_a",
                      synthesize(deterministic_coefficients(lattice.nodes.size(), 1),
                                 lattice, L, 2.0, 0.0)});
    corpus.push_back({"synth_b",
                      synthesize(deterministic_coefficients(lattice.nodes.size(), 2),
                                 lattice, L, 2.0, 0.0)});
    return corpus;
}

std::vector<AnalyticFn> corpus_functions(const std::vector<NamedFn>& corpus) {
    std::vector<AnalyticFn> fns;
    fns.reserve(corpus.size());
    for (const auto& nf : corpus) fns.push_back(nf.fn);
    return fns;
}

std::vector<NamedFn> vanishing_g_suite() {
    return {{"g_z", AnalyticFn::monomial(1)},
            {"g_z2", AnalyticFn::monomial(2)},
            {"g_z3", AnalyticFn::monomial(3)}};
}

std::vector<NamedFn> critical_g_suite() {
    // g' = (1-z)^-1, so |g'| (1-|z|^2) is bounded but does not vanish at z -> 1.
    return {{"g_log_1", AnalyticFn::log_kernel(1.0)}};
}

std::vector<NamedFn> bounded_g_suite() {
    auto suite = vanishing_g_suite();
    suite.push_back(critical_g_suite()[0]);
    suite.push_back({"g_kernel_09", AnalyticFn::kernel(0.9, 1.0)});
    return suite;
}

std::vector<NamedFn> unbounded_g_suite() {
    // g' = (1-z)^-1.5 and g' = (1-z)^-2; both fail the e = 1 sup criterion.
    return {{"g_sqrt_sing", AnalyticFn::kernel(1.0, 0.5, 2.0)},
            {"g_pole_sing", AnalyticFn::kernel(1.0, 1.0, 1.0)}};
}

NamedFn membership_critical_symbol() {
    return {"g_pole_sing", AnalyticFn::kernel(1.0, 1.0, 1.0)};
}

NamedFn membership_supercritical_symbol() {
    // g' = (1-z)^-2.5
    return {"g_super_sing", AnalyticFn::kernel(1.0, 1.5, 1.0 / 1.5)};
}

}  // namespace tentops
