#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qsrm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Largest entry magnitude. This is the norm every tolerance in the library
/// is scaled by.
double max_abs(const ComplexMatrix &a);

/// (a + a*) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix &a);

/// max |a_ij - conj(a_ji)|.
double hermitian_defect(const ComplexMatrix &a);

struct HermEig {
    RealVector eigenvalues;     // descending
    ComplexMatrix eigenvectors; // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix. Each eigenvector is rotated so
/// that its largest-magnitude component (first one on ties) is real positive.
///
/// Throws NotSquare, NotHermitian (defect above 1e-9 * max_abs(a)) or
/// NoConvergence.
HermEig herm_eig(const ComplexMatrix &a);

enum class RootPower { Half, InverseHalf };

/// Sentinel asking psd_sqrt_pm for the default cutoff of 1e-12 * max_abs(a).
inline constexpr double kDefaultCutoff = -1.0;

/// a^{1/2} or the Moore-Penrose a^{-1/2} of a Hermitian PSD matrix.
/// Eigenvalues in [-cutoff, cutoff] count as zero; anything below -cutoff
/// throws NegativeEigenvalue.
ComplexMatrix psd_sqrt_pm(const ComplexMatrix &a, RootPower power,
                          double cutoff = kDefaultCutoff);

enum class ErrorMetric {
    MaxAbs,     // max |Δρ_ij|
    MeanSquare, // Σ|Δρ_ij|² / n²
};

double reconstruction_error(const ComplexMatrix &residual, ErrorMetric metric);

struct LowRankFactor {
    ComplexMatrix factor;   // n x r, columns U_r * sqrt(Λ_r)
    RealVector eigenvalues; // full spectrum, descending
    double error = 0.0;     // reconstruction error at the chosen rank

    Eigen::Index rank() const { return factor.cols(); }
};

/// Minimal-rank factor γ with ρ ≈ γγ* to accuracy nu under `metric`.
/// Throws NotPSD if ρ has an eigenvalue below -1e-10 * max(1, max_abs(ρ)).
LowRankFactor low_rank_factor(const ComplexMatrix &rho, double nu,
                              ErrorMetric metric = ErrorMetric::MaxAbs);

/// Reconstruction error of the rank-r truncation for r = 0..n, using only
/// the positive part of the spectrum.
std::vector<double> rank_error_profile(const ComplexMatrix &rho, ErrorMetric metric);

}  // namespace qsrm
