#pragma once

// Independent reference computations for the tests. Nothing in here calls
// into the library's numeric kernels.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qsrm::oracle {

using Complex = std::complex<double>;

inline double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

/// L_m^k(x) from the explicit finite series, summed in long double to
/// survive the cancellation at x > 0.
inline double laguerre_series(int m, int k, double x) {
    long double sum = 0.0L;
    long double term = 1.0L;  // x^i / i!
    for (int i = 0; i <= m; ++i) {
        if (i > 0) {
            term *= static_cast<long double>(x) / i;
        }
        const long double c = std::exp(std::lgamma(static_cast<long double>(m + k + 1)) -
                                       std::lgamma(static_cast<long double>(m - i + 1)) -
                                       std::lgamma(static_cast<long double>(k + i + 1)));
        sum += (i % 2 == 0 ? 1.0L : -1.0L) * c * term;
    }
    return static_cast<double>(sum);
}

inline double poisson_pmf(int m, double mean) {
    if (mean == 0.0) {
        return m == 0 ? 1.0 : 0.0;
    }
    return std::exp(-mean + m * std::log(mean) - std::lgamma(m + 1.0));
}

/// Pe of the pure m-PSK square-root measurement from the DFT of the first
/// Gram row: 1 - (Σ sqrt(D_k))² / m².
inline double pure_psk_pe(int m, double ns) {
    std::vector<double> d(static_cast<std::size_t>(m), 0.0);
    for (int k = 0; k < m; ++k) {
        Complex acc = 0.0;
        for (int s = 0; s < m; ++s) {
            const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * s / m);
            const Complex g0s = std::exp(-ns * (1.0 - w));
            acc += g0s * std::polar(1.0, -2.0 * std::numbers::pi * k * s / m);
        }
        d[static_cast<std::size_t>(k)] = acc.real();
    }
    double root_sum = 0.0;
    for (double dk : d) {
        root_sum += std::sqrt(std::max(dk, 0.0));
    }
    return 1.0 - root_sum * root_sum / (static_cast<double>(m) * m);
}

/// Helstrom bound for two equiprobable pure states with overlap |<a|b>|².
inline double helstrom_pure_pe(double overlap_sq) {
    return 0.5 * (1.0 - std::sqrt(1.0 - overlap_sq));
}

inline double gaussian_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

/// m-PSK error of a complex Gaussian (per-axis variance sigma2) centred at
/// radius sqrt(ns), by direct polar-grid integration of the density over the
/// correct-decision wedge |θ| < π/m.
inline double psk_wedge_error(int m, double ns, double sigma2) {
    const double a = std::sqrt(ns);
    const double half = std::numbers::pi / m;
    const double r_max = a + 14.0 * std::sqrt(sigma2);
    const int nr = 4000;
    const int nt = 2000;
    const double dr = r_max / nr;
    const double dt = 2.0 * half / nt;
    double inside = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = (i + 0.5) * dr;
        for (int j = 0; j < nt; ++j) {
            const double t = -half + (j + 0.5) * dt;
            const double dx = r * std::cos(t) - a;
            const double dy = r * std::sin(t);
            inside += std::exp(-(dx * dx + dy * dy) / (2.0 * sigma2)) * r;
        }
    }
    inside *= dr * dt / (2.0 * std::numbers::pi * sigma2);
    return 1.0 - inside;
}

/// Haar-ish random unitary from the QR of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            z(i, j) = Complex(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace qsrm::oracle
