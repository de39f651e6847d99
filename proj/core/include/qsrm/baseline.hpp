#pragma once

#include "qsrm/constellation.hpp"
#include "qsrm/glauber.hpp"

namespace qsrm {

/// Classical quadrature receiver: each quadrature of γ is observed in
/// Gaussian noise of variance (1 + 2N)/4, so BPSK sees SNR = 4 Ns / (1 + 2N).
struct HomodyneModel {
    double snr = 0.0;
    double per_quadrature_sigma2 = 0.0;

    static HomodyneModel make(double ns, double noise);
};

/// Gaussian tail Q(x) = P[Z > x].
double q_function(double x);

/// Symbol error probability of minimum-distance decisions on the homodyne
/// observation. m-PSK with m > 2 is integrated numerically.
double homodyne_pe(const Modulation &modulation, double ns, double noise);

/// Minimum error probability for two density matrices,
/// 1 - q0 Tr ρ0 - Tr (q1 ρ1 - q0 ρ0)_+.
double helstrom_binary_pe(const DensityMatrix &rho0, const DensityMatrix &rho1, double q0,
                          double q1);

}  // namespace qsrm
