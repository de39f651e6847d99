#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsrm/glauber.hpp"

namespace qsrm {

/// Ordered coherent-state alphabet with priors. When `gus` is set the
/// amplitudes are γ_0 W_m^i for i = 0..m-1 with W_m = exp(2πi/m).
struct Constellation {
    std::vector<Complex> amplitudes;
    std::vector<double> priors;
    bool gus = false;
    int generator_order = 0;
    std::string label;

    std::size_t size() const { return amplitudes.size(); }
    CoherentAmplitude amplitude(std::size_t i) const { return {amplitudes.at(i)}; }
    double mean_photons() const;
    double max_photons() const;
};

/// L x L square QAM scaled to `ns` average photons, enumerated row-major
/// over (u, v) with u, v in {-(L-1), ..., L-1} step 2.
Constellation qam(int side, double ns);

/// m-PSK with real positive γ_0 = sqrt(ns).
Constellation psk(int order, double ns);

/// Scale Δ of an L x L QAM with `ns` average photons.
double qam_scale(int side, double ns);

void to_json(nlohmann::json &j, const Constellation &c);

/// Modulation family plus its size parameter: the PSK order m or the QAM
/// side L.
struct Modulation {
    enum class Kind { Psk, Qam };

    Kind kind = Kind::Psk;
    int size = 4;

    static Modulation psk(int order) { return {Kind::Psk, order}; }
    static Modulation qam(int side) { return {Kind::Qam, side}; }

    int symbols() const { return kind == Kind::Psk ? size : size * size; }
    std::string label() const;
    Constellation make(double ns) const;
};

}  // namespace qsrm
