#include "qsrm/glauber.hpp"

#include <cmath>
#include <sstream>

#include "qsrm/error.hpp"

namespace qsrm {

namespace {

constexpr int kMaxTruncation = 4096;

// log L_m^k(-y) for y >= 0. Every term of the series is positive there, so
// the recurrence only needs rescaling, never sign tracking.
double log_laguerre_negative(int m, int k, double y) {
    if (m == 0) {
        return 0.0;
    }
    double prev = 1.0;
    double cur = 1.0 + k + y;
    double log_scale = 0.0;
    for (int j = 1; j < m; ++j) {
        const double next = ((2.0 * j + 1.0 + k + y) * cur - (j + k) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
        if (cur > 1e150) {
            prev /= cur;
            log_scale += std::log(cur);
            cur = 1.0;
        }
    }
    return log_scale + std::log(cur);
}

void require_dimension(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    }
}

}  // namespace

ThermalNoise::ThermalNoise(double mean_photons) : mean_photons_(mean_photons) {
    if (!(mean_photons >= 0.0) || !std::isfinite(mean_photons)) {
        throw Error(ErrorCode::InvalidArgument, "thermal photon number must be finite and >= 0");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw Error(ErrorCode::NotSquare, "density matrix must be square and non-empty");
    }
    if (!matrix.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "density matrix has non-finite entries");
    }
    const double defect = hermitian_defect(matrix);
    if (defect > 1e-9 * std::max(1.0, max_abs(matrix))) {
        std::ostringstream msg;
        msg << "density matrix Hermitian defect " << defect;
        throw Error(ErrorCode::NotHermitian, msg.str());
    }
    matrix_ = (matrix + matrix.adjoint()) * 0.5;
}

DensityMatrix DensityMatrix::normalized() const {
    const double t = trace();
    if (!(t > 0.0)) {
        throw Error(ErrorCode::NotPSD, "cannot normalize a density matrix with trace <= 0");
    }
    return DensityMatrix(matrix_ / t);
}

ComplexMatrix coherent_ket(CoherentAmplitude gamma, int n) {
    require_dimension(n);
    ComplexMatrix ket = ComplexMatrix::Zero(n, 1);
    const double r = std::abs(gamma.value);
    if (r == 0.0) {
        ket(0, 0) = 1.0;
        return ket;
    }
    const double log_r = std::log(r);
    const double phase = std::arg(gamma.value);
    for (int k = 0; k < n; ++k) {
        const double log_mag = -0.5 * r * r + k * log_r - 0.5 * std::lgamma(k + 1.0);
        ket(k, 0) = std::polar(std::exp(log_mag), k * phase);
    }
    return ket;
}

Complex inner_product(CoherentAmplitude alpha, CoherentAmplitude beta) {
    const Complex a = alpha.value;
    const Complex b = beta.value;
    return std::exp(-0.5 * (std::norm(a) + std::norm(b) - 2.0 * std::conj(a) * b));
}

double laguerre(int m, int k, double x) {
    if (m < 0 || k < 0) {
        throw Error(ErrorCode::InvalidArgument, "Laguerre degree and order must be >= 0");
    }
    if (m == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 1.0 + k - x;
    for (int j = 1; j < m; ++j) {
        const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

ComplexMatrix thermal_block(CoherentAmplitude gamma, ThermalNoise noise, int n) {
    require_dimension(n);
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    const double photons = gamma.photon_mean();

    if (noise.is_noiseless()) {
        const ComplexMatrix ket = coherent_ket(gamma, n);
        rho = ket * ket.adjoint();
    } else if (photons == 0.0) {
        const double v = noise.v();
        for (int k = 0; k < n; ++k) {
            rho(k, k) = (1.0 - v) * std::pow(v, k);
        }
    } else {
        const double big_n = noise.mean_photons();
        const double v = noise.v();
        const double log_one_minus_v = -std::log1p(big_n);
        const double log_v = std::log(big_n) - std::log1p(big_n);
        const double log_ratio = 0.5 * std::log(photons) - std::log(big_n);  // log |γ|/N
        const double phase = -std::arg(gamma.value);                        // arg γ*
        const double y = photons / (big_n * (big_n + 1.0));
        const double envelope = -(1.0 - v) * photons;

        for (int m = 0; m < n; ++m) {
            for (int k = m; k < n; ++k) {
                const int d = k - m;
                const double log_mag = log_one_minus_v + k * log_v +
                                       0.5 * (std::lgamma(m + 1.0) - std::lgamma(k + 1.0)) +
                                       d * log_ratio + envelope + log_laguerre_negative(m, d, y);
                const Complex entry = std::polar(std::exp(log_mag), d * phase);
                rho(m, k) = entry;
                rho(k, m) = std::conj(entry);
            }
        }
    }
    return rho;
}

DensityMatrix thermal_density(CoherentAmplitude gamma, ThermalNoise noise, int n) {
    ComplexMatrix rho = thermal_block(gamma, noise, n);
    const double trace = rho.trace().real();
    if (trace < 0.5) {
        std::ostringstream msg;
        msg << "truncation n=" << n << " keeps only trace " << trace;
        throw Error(ErrorCode::DimensionTooSmall, msg.str());
    }
    return DensityMatrix(std::move(rho));
}

double laguerre_pmf(int m, CoherentAmplitude gamma, ThermalNoise noise) {
    if (m < 0) {
        throw Error(ErrorCode::InvalidArgument, "photon count must be >= 0");
    }
    const double photons = gamma.photon_mean();
    if (noise.is_noiseless()) {
        if (photons == 0.0) {
            return m == 0 ? 1.0 : 0.0;
        }
        return std::exp(-photons + m * std::log(photons) - std::lgamma(m + 1.0));
    }
    const double big_n = noise.mean_photons();
    const double log_base = -std::log1p(big_n) + m * (std::log(big_n) - std::log1p(big_n));
    if (photons == 0.0) {
        return std::exp(log_base);
    }
    const double v = noise.v();
    const double y = photons / (big_n * (big_n + 1.0));
    return std::exp(log_base - (1.0 - v) * photons + log_laguerre_negative(m, 0, y));
}

int choose_truncation(CoherentAmplitude gamma, ThermalNoise noise, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "truncation accuracy must lie in (0, 1)");
    }
    // Neumaier-compensated running sum of the photon-count distribution.
    double sum = 0.0;
    double carry = 0.0;
    for (int n = 1; n <= kMaxTruncation; ++n) {
        const double p = laguerre_pmf(n - 1, gamma, noise);
        const double t = sum + p;
        carry += std::abs(sum) >= std::abs(p) ? (sum - t) + p : (p - t) + sum;
        sum = t;
        if (sum + carry >= 1.0 - epsilon) {
            return n;
        }
    }
    std::ostringstream msg;
    msg << "no truncation up to " << kMaxTruncation << " reaches accuracy " << epsilon;
    throw Error(ErrorCode::DimensionTooSmall, msg.str());
}

}  // namespace qsrm
