#include "tentops/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace tentops {

double pseudo_hyperbolic(Complex z, Complex w) {
    return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

double hyperbolic(Complex z, Complex w) {
    const double rho = pseudo_hyperbolic(z, w);
    return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

bool in_nontangential(Complex z, Complex eta, double zeta) {
    if (zeta <= 0.5) throw std::invalid_argument("aperture must exceed 1/2");
    return std::abs(z - eta) < zeta * (1.0 - std::norm(z));
}

bool in_carleson_box(Complex u, Complex z) {
    const double r = std::abs(u);
    if (r == 0.0) return true;  // S(0) is the whole disk
    if (1.0 - std::abs(z) > 1.0 - r) return false;
    double dt = std::arg(z) - std::arg(u);
    dt = std::remainder(dt, 2.0 * std::numbers::pi);
    return std::abs(dt) <= 0.5 * (1.0 - r);
}

bool in_hyperbolic_disk(Complex center, double r, Complex z) {
    if (r <= 0) throw std::invalid_argument("hyperbolic radius must be positive");
    return hyperbolic(center, z) < r;
}

bool is_separated(std::span<const Complex> nodes, double tau) {
    if (tau <= 0) throw std::invalid_argument("tau must be positive");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (hyperbolic(nodes[i], nodes[j]) < tau) return false;
    return true;
}

Lattice generate_lattice(double r, double kappa, double radial_cap) {
    if (!(r > kappa && kappa > 0))
        throw std::invalid_argument("lattice requires r > kappa > 0");
    if (!(radial_cap > 0 && radial_cap < 1))
        throw std::invalid_argument("radial_cap must lie in (0,1)");

    Lattice lat;
    lat.r = r;
    lat.kappa = kappa;
    lat.radial_cap = radial_cap;
    lat.nodes.push_back(Complex{0.0, 0.0});

    // Consecutive rings sit at hyperbolic distance delta, so cross-ring pairs are
    // automatically separated by >= delta = 2*kappa. Within a ring the angular
    // count is the largest one keeping adjacent separation >= 2*kappa.
    const double delta = 2.0 * kappa;
    const double rho_min = std::tanh(delta);
    for (int m = 1;; ++m) {
        const double s = std::tanh(m * delta);
        if (s > radial_cap) break;
        auto adjacent_rho = [s](int count) {
            const double dt = 2.0 * std::numbers::pi / count;
            const Complex z1{s, 0.0};
            const Complex z2 = s * std::polar(1.0, dt);
            return pseudo_hyperbolic(z1, z2);
        };
        int count = 1;
        while (adjacent_rho(count + 1) >= rho_min) ++count;
        const double phase = 0.5 * std::numbers::pi * m;  // stagger rings
        for (int j = 0; j < count; ++j) {
            const double theta = phase + 2.0 * std::numbers::pi * j / count;
            lat.nodes.push_back(s * std::polar(1.0, theta));
        }
    }
    return lat;
}

std::string lattice_to_json(const Lattice& lat) {
    nlohmann::json j;
    j["r"] = lat.r;
    j["kappa"] = lat.kappa;
    j["radial_cap"] = lat.radial_cap;
    auto& nodes = j["nodes"] = nlohmann::json::array();
    for (const auto& a : lat.nodes) nodes.push_back({a.real(), a.imag()});
    return j.dump();
}

Lattice lattice_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Lattice lat;
    lat.r = j.at("r").get<double>();
    lat.kappa = j.at("kappa").get<double>();
    lat.radial_cap = j.value("radial_cap", 1.0);
    for (const auto& n : j.at("nodes"))
        lat.nodes.emplace_back(n.at(0).get<double>(), n.at(1).get<double>());
    return lat;
}

}  // namespace tentops
