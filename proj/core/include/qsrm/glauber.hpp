#pragma once

#include "qsrm/hermitian.hpp"

namespace qsrm {

/// Complex envelope γ of a coherent state.
struct CoherentAmplitude {
    Complex value{0.0, 0.0};

    /// Average photon number |γ|².
    double photon_mean() const { return std::norm(value); }
};

/// Thermal background with N average photons; v = N / (1 + N).
class ThermalNoise {
  public:
    ThermalNoise() = default;
    explicit ThermalNoise(double mean_photons);

    double mean_photons() const { return mean_photons_; }
    double v() const { return mean_photons_ / (1.0 + mean_photons_); }
    bool is_noiseless() const { return mean_photons_ == 0.0; }

  private:
    double mean_photons_ = 0.0;
};

/// Hermitian n x n density matrix in the photon-number basis. Construction
/// symmetrizes the input; positivity is checked by the factorization.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    explicit DensityMatrix(ComplexMatrix matrix);

    Eigen::Index dim() const { return matrix_.rows(); }
    const ComplexMatrix &matrix() const { return matrix_; }
    double trace() const { return matrix_.trace().real(); }

    /// Same matrix scaled to unit trace.
    DensityMatrix normalized() const;

  private:
    ComplexMatrix matrix_;
};

/// First n number-basis components of |γ>, as an n x 1 matrix.
ComplexMatrix coherent_ket(CoherentAmplitude gamma, int n);

/// <α|β> between two coherent states.
Complex inner_product(CoherentAmplitude alpha, CoherentAmplitude beta);

/// Generalized Laguerre polynomial L_m^k(x) by three-term recurrence.
double laguerre(int m, int k, double x);

/// Leading n x n block of the density operator, with no check on how much
/// of the trace it retains.
ComplexMatrix thermal_block(CoherentAmplitude gamma, ThermalNoise noise, int n);

/// Truncated n x n density matrix of a coherent state in thermal noise.
/// Degenerates to the diagonal geometric matrix for γ = 0 and to |γ><γ|
/// for N = 0. Throws DimensionTooSmall when the retained trace is < 0.5.
DensityMatrix thermal_density(CoherentAmplitude gamma, ThermalNoise noise, int n);

/// Photon-count probability p(m) of the noisy coherent state (the diagonal
/// of thermal_density).
double laguerre_pmf(int m, CoherentAmplitude gamma, ThermalNoise noise);

/// Smallest n with Σ_{m<n} p(m) >= 1 - epsilon. Searches up to 4096.
int choose_truncation(CoherentAmplitude gamma, ThermalNoise noise, double epsilon);

}  // namespace qsrm
