#pragma once

#include <string>
#include <vector>

#include "tentops/funcmodel.hpp"
#include "tentops/geometry.hpp"

namespace tentops {

struct NamedFn {
    std::string name;
    AnalyticFn fn;
};

/// The standard 12-function corpus: a constant, monomials, kernel atoms at
/// |a| in {0.5, 0.9, 0.99} with two exponents, a log atom, and two deterministic
/// atomic-synthesis outputs on the given lattice (built with p = 2, alpha = 0).
std::vector<NamedFn> standard_corpus(const Lattice& lattice);

std::vector<AnalyticFn> corpus_functions(const std::vector<NamedFn>& corpus);

/// g-suites for the default T-kind parameters (p = q, alpha = beta, n - k = 1,
/// criterion exponent e = 1): polynomials are bounded and compact, the log atom at
/// the critical exponent is bounded but not compact, primitives of (1-z)^(-1-e-0.5)
/// are unbounded.
std::vector<NamedFn> bounded_g_suite();
std::vector<NamedFn> vanishing_g_suite();
std::vector<NamedFn> critical_g_suite();   // bounded, not compact (e = 1)
std::vector<NamedFn> unbounded_g_suite();  // e = 1

/// Membership-criterion symbols for q < p with lambda = 0: the critical symbol has
/// g' = (1-z)^-2, the super-critical one g' = (1-z)^-2.5.
NamedFn membership_critical_symbol();
NamedFn membership_supercritical_symbol();

/// Deterministic pseudo-random coefficient sequences (fixed internal seed).
std::vector<Complex> deterministic_coefficients(std::size_t count, unsigned stream);

}  // namespace tentops
