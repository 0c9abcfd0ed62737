#include "tentops/funcmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace tentops {

AnalyticFn AnalyticFn::constant(Complex c) {
    AnalyticFn f;
    f.series.coeffs = {c};
    return f;
}

AnalyticFn AnalyticFn::monomial(int m, Complex c) {
    if (m < 0) throw std::invalid_argument("monomial degree must be >= 0");
    AnalyticFn f;
    f.series.coeffs.assign(m + 1, Complex{0.0, 0.0});
    f.series.coeffs[m] = c;
    return f;
}

AnalyticFn AnalyticFn::from_series(std::vector<Complex> coeffs) {
    AnalyticFn f;
    f.series.coeffs = std::move(coeffs);
    return f;
}

AnalyticFn AnalyticFn::kernel(Complex base, double exponent, Complex coeff) {
    if (std::abs(base) > 1.0 + 1e-15)
        throw std::invalid_argument("kernel atom base must satisfy |base| <= 1");
    if (exponent <= 0) throw std::invalid_argument("kernel atom exponent must be positive");
    AnalyticFn f;
    f.atoms.push_back({base, exponent, coeff});
    return f;
}

AnalyticFn AnalyticFn::log_kernel(Complex base, Complex coeff) {
    if (std::abs(base) > 1.0 + 1e-15)
        throw std::invalid_argument("log atom base must satisfy |base| <= 1");
    AnalyticFn f;
    f.logs.push_back({base, coeff});
    return f;
}

bool AnalyticFn::is_zero() const {
    for (const auto& a : atoms)
        if (a.coeff != Complex{}) return false;
    for (const auto& l : logs)
        if (l.coeff != Complex{}) return false;
    for (const auto& c : series.coeffs)
        if (c != Complex{}) return false;
    return true;
}

AnalyticFn& AnalyticFn::operator+=(const AnalyticFn& other) {
    atoms.insert(atoms.end(), other.atoms.begin(), other.atoms.end());
    logs.insert(logs.end(), other.logs.begin(), other.logs.end());
    if (other.series.coeffs.size() > series.coeffs.size())
        series.coeffs.resize(other.series.coeffs.size());
    for (std::size_t i = 0; i < other.series.coeffs.size(); ++i)
        series.coeffs[i] += other.series.coeffs[i];
    return *this;
}

AnalyticFn AnalyticFn::scaled(Complex c) const {
    AnalyticFn f = *this;
    for (auto& a : f.atoms) a.coeff *= c;
    for (auto& l : f.logs) l.coeff *= c;
    for (auto& s : f.series.coeffs) s *= c;
    return f;
}

Complex evaluate(const AnalyticFn& f, Complex z) {
    Complex v{0.0, 0.0};
    for (const auto& a : f.atoms)
        v += a.coeff * std::pow(1.0 - std::conj(a.base) * z, -a.exponent);
    for (const auto& l : f.logs)
        v += -l.coeff * std::log(1.0 - std::conj(l.base) * z);
    // Horner on the polynomial part.
    Complex p{0.0, 0.0};
    for (auto it = f.series.coeffs.rbegin(); it != f.series.coeffs.rend(); ++it)
        p = p * z + *it;
    return v + p;
}

AnalyticFn derivative(const AnalyticFn& f, int m) {
    if (m < 0) throw std::invalid_argument("derivative order must be >= 0");
    AnalyticFn g = f;
    for (int step = 0; step < m; ++step) {
        AnalyticFn d;
        for (const auto& a : g.atoms) {
            // d/dz (1-conj(b)z)^(-s) = s conj(b) (1-conj(b)z)^(-(s+1))
            d.atoms.push_back({a.base, a.exponent + 1.0,
                               a.coeff * a.exponent * std::conj(a.base)});
        }
        for (const auto& l : g.logs)
            d.atoms.push_back({l.base, 1.0, l.coeff * std::conj(l.base)});
        if (g.series.coeffs.size() > 1) {
            d.series.coeffs.resize(g.series.coeffs.size() - 1);
            for (std::size_t i = 1; i < g.series.coeffs.size(); ++i)
                d.series.coeffs[i - 1] = static_cast<double>(i) * g.series.coeffs[i];
        }
        g = std::move(d);
    }
    return g;
}

std::vector<Complex> taylor(const AnalyticFn& f, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<Complex> c(degree + 1, Complex{0.0, 0.0});
    for (const auto& a : f.atoms) {
        // (1-conj(b)z)^(-s) = sum_m prod_{i<m} ((s+i)/(i+1)) (conj(b) z)^m
        Complex term = a.coeff;
        const Complex b = std::conj(a.base);
        for (int m = 0; m <= degree; ++m) {
            c[m] += term;
            term *= b * (a.exponent + m) / (m + 1.0);
        }
    }
    for (const auto& l : f.logs) {
        // log(1/(1-conj(b)z)) = sum_{m>=1} (conj(b) z)^m / m
        const Complex b = std::conj(l.base);
        Complex bp = b;
        for (int m = 1; m <= degree; ++m) {
            c[m] += l.coeff * bp / static_cast<double>(m);
            bp *= b;
        }
    }
    for (std::size_t i = 0; i < f.series.coeffs.size() && i <= static_cast<std::size_t>(degree); ++i)
        c[i] += f.series.coeffs[i];
    return c;
}

AnalyticFn integrate_n(const AnalyticFn& f, int n, int degree) {
    if (n < 1) throw std::invalid_argument("integration order must be >= 1");
    std::vector<Complex> c = taylor(f, degree);
    for (int step = 0; step < n; ++step) {
        std::vector<Complex> shifted(c.size() + 1, Complex{0.0, 0.0});
        for (std::size_t m = 0; m < c.size(); ++m)
            shifted[m + 1] = c[m] / static_cast<double>(m + 1);
        c = std::move(shifted);
    }
    return AnalyticFn::from_series(std::move(c));
}

AnalyticFn product(const AnalyticFn& f, const AnalyticFn& g, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    // Exact closed form when both sides are a single kernel atom with the same base.
    if (f.atoms.size() == 1 && g.atoms.size() == 1 && f.logs.empty() && g.logs.empty() &&
        f.series.coeffs.empty() && g.series.coeffs.empty() &&
        f.atoms[0].base == g.atoms[0].base) {
        return AnalyticFn::kernel(f.atoms[0].base, f.atoms[0].exponent + g.atoms[0].exponent,
                                  f.atoms[0].coeff * g.atoms[0].coeff);
    }
    const auto a = taylor(f, degree);
    const auto b = taylor(g, degree);
    std::vector<Complex> c(degree + 1, Complex{0.0, 0.0});
    for (int i = 0; i <= degree; ++i) {
        if (a[i] == Complex{}) continue;
        for (int j = 0; i + j <= degree; ++j) c[i + j] += a[i] * b[j];
    }
    return AnalyticFn::from_series(std::move(c));
}

AnalyticFn test_fn_boundedness(Complex u, double p, double alpha) {
    if (p <= 0 || alpha <= -2) throw std::invalid_argument("need p > 0 and alpha > -2");
    if (std::abs(u) >= 1.0) throw std::invalid_argument("u must lie in the open disk");
    return AnalyticFn::kernel(u, (alpha + 2.0) / p);
}

AnalyticFn test_fn_compactness(Complex zj, double p, double alpha) {
    if (p <= 0 || alpha <= -2) throw std::invalid_argument("need p > 0 and alpha > -2");
    if (std::abs(zj) >= 1.0) throw std::invalid_argument("z_j must lie in the open disk");
    const double s = (alpha + 2.0) / p + 0.5 / p;
    const double c = std::pow(1.0 - std::norm(zj), 0.5 / p);
    return AnalyticFn::kernel(zj, s, Complex{c, 0.0});
}

namespace {

nlohmann::json cplx(Complex z) { return {z.real(), z.imag()}; }

Complex read_cplx(const nlohmann::json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

std::string analytic_fn_to_json(const AnalyticFn& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& a : f.atoms)
        terms.push_back({{"type", "kernel"}, {"a", cplx(a.base)}, {"s", a.exponent},
                         {"coeff", cplx(a.coeff)}});
    for (const auto& l : f.logs)
        terms.push_back({{"type", "log"}, {"a", cplx(l.base)}, {"coeff", cplx(l.coeff)}});
    if (!f.series.coeffs.empty()) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : f.series.coeffs) coeffs.push_back(cplx(c));
        terms.push_back({{"type", "poly"}, {"coeffs", coeffs}});
    }
    return terms.dump();
}

AnalyticFn analytic_fn_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    AnalyticFn f;
    for (const auto& term : j) {
        const std::string type = term.at("type").get<std::string>();
        if (type == "kernel") {
            f.atoms.push_back({read_cplx(term.at("a")), term.at("s").get<double>(),
                               term.contains("coeff") ? read_cplx(term.at("coeff"))
                                                      : Complex{1.0, 0.0}});
        } else if (type == "log") {
            f.logs.push_back({read_cplx(term.at("a")),
                              term.contains("coeff") ? read_cplx(term.at("coeff"))
                                                     : Complex{1.0, 0.0}});
        } else if (type == "poly") {
            std::vector<Complex> coeffs;
            for (const auto& c : term.at("coeffs")) coeffs.push_back(read_cplx(c));
            AnalyticFn p = AnalyticFn::from_series(std::move(coeffs));
            f += p;
        } else {
            throw std::invalid_argument("unknown term type '" + type + "'");
        }
    }
    return f;
}

}  // namespace tentops
