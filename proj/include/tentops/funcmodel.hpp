#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tentops/geometry.hpp"

namespace tentops {

/// coeff * (1 - conj(base) z)^(-exponent), principal branch.
/// |base| <= 1 is allowed; evaluation is restricted to |z| < 1, where
/// 1 - conj(base) z stays in the right half-plane.
struct KernelAtom {
    Complex base;
    double exponent = 1.0;
    Complex coeff{1.0, 0.0};
};

/// coeff * log(1/(1 - conj(base) z)), principal branch.
struct LogAtom {
    Complex base;
    Complex coeff{1.0, 0.0};
};

/// Finite power series sum c_m z^m.
struct PowerSeries {
    std::vector<Complex> coeffs;
};

/// Closed-form analytic function on the disk: kernel atoms + log atoms + a polynomial
/// part. Supports exact differentiation; iterated integration goes through a
/// truncated Taylor expansion.
class AnalyticFn {
public:
    AnalyticFn() = default;
    static AnalyticFn constant(Complex c);
    static AnalyticFn monomial(int m, Complex c = {1.0, 0.0});
    static AnalyticFn from_series(std::vector<Complex> coeffs);
    static AnalyticFn kernel(Complex base, double exponent, Complex coeff = {1.0, 0.0});
    static AnalyticFn log_kernel(Complex base, Complex coeff = {1.0, 0.0});

    std::vector<KernelAtom> atoms;
    std::vector<LogAtom> logs;
    PowerSeries series;

    bool is_zero() const;
    AnalyticFn& operator+=(const AnalyticFn& other);
    friend AnalyticFn operator+(AnalyticFn a, const AnalyticFn& b) { return a += b; }
    AnalyticFn scaled(Complex c) const;
};

Complex evaluate(const AnalyticFn& f, Complex z);

/// Exact m-th derivative in closed form: kernel atoms stay kernel atoms, log atoms
/// become kernel atoms, the polynomial part shifts down.
AnalyticFn derivative(const AnalyticFn& f, int m);

/// Taylor coefficients c_0..c_degree of f about 0.
std::vector<Complex> taylor(const AnalyticFn& f, int degree);

/// n-fold antiderivative vanishing to order n at 0, computed on the degree-truncation.
AnalyticFn integrate_n(const AnalyticFn& f, int n, int degree);

/// Product. Kernel atoms sharing a base multiply exactly; everything else goes
/// through the Cauchy product of the degree-truncations.
AnalyticFn product(const AnalyticFn& f, const AnalyticFn& g, int degree);

/// f_u(z) = (1 - conj(u) z)^(-(alpha+2)/p), the boundedness test family.
AnalyticFn test_fn_boundedness(Complex u, double p, double alpha);

/// f_j(z) = (1-|z_j|^2)^(1/(2p)) (1 - conj(z_j) z)^(-((alpha+2)/p + 1/(2p))),
/// the compactness test family.
AnalyticFn test_fn_compactness(Complex zj, double p, double alpha);

std::string analytic_fn_to_json(const AnalyticFn& f);
AnalyticFn analytic_fn_from_json(const std::string& text);

}  // namespace tentops
