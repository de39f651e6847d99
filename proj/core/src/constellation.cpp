#include "qsrm/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsrm/error.hpp"

namespace qsrm {

double Constellation::mean_photons() const {
    double total = 0.0;
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        total += priors[i] * std::norm(amplitudes[i]);
    }
    return total;
}

double Constellation::max_photons() const {
    double best = 0.0;
    for (const Complex &a : amplitudes) {
        best = std::max(best, std::norm(a));
    }
    return best;
}

double qam_scale(int side, double ns) {
    const double m = static_cast<double>(side) * side;
    return std::sqrt(3.0 * ns / (2.0 * (m - 1.0)));
}

Constellation qam(int side, double ns) {
    if (side < 2) {
        throw Error(ErrorCode::InvalidArgument, "QAM side must be >= 2");
    }
    if (!(ns > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "photons per symbol must be > 0");
    }
    const double delta = qam_scale(side, ns);
    const std::size_t m = static_cast<std::size_t>(side) * side;

    Constellation c;
    c.amplitudes.reserve(m);
    for (int iu = 0; iu < side; ++iu) {
        const double u = -(side - 1) + 2.0 * iu;
        for (int iv = 0; iv < side; ++iv) {
            const double v = -(side - 1) + 2.0 * iv;
            c.amplitudes.emplace_back(delta * u, delta * v);
        }
    }
    c.priors.assign(m, 1.0 / static_cast<double>(m));
    c.label = "qam-" + std::to_string(m);
    return c;
}

Constellation psk(int order, double ns) {
    if (order < 2) {
        throw Error(ErrorCode::InvalidArgument, "PSK order must be >= 2");
    }
    if (!(ns > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "photons per symbol must be > 0");
    }
    const double radius = std::sqrt(ns);
    Constellation c;
    c.amplitudes.reserve(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        c.amplitudes.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / order));
    }
    c.priors.assign(static_cast<std::size_t>(order), 1.0 / order);
    c.gus = true;
    c.generator_order = order;
    c.label = "psk-" + std::to_string(order);
    return c;
}

std::string Modulation::label() const {
    return (kind == Kind::Psk ? "psk-" : "qam-") + std::to_string(symbols());
}

Constellation Modulation::make(double ns) const {
    return kind == Kind::Psk ? qsrm::psk(size, ns) : qsrm::qam(size, ns);
}

void to_json(nlohmann::json &j, const Constellation &c) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex &a : c.amplitudes) {
        amps.push_back({a.real(), a.imag()});
    }
    j = nlohmann::json{{"label", c.label},
                       {"amplitudes", amps},
                       {"priors", c.priors},
                       {"gus", c.gus},
                       {"generator_order", c.generator_order}};
}

}  // namespace qsrm
