#include <random>

#include <gtest/gtest.h>

#include "qsrm/error.hpp"
#include "qsrm/glauber.hpp"
#include "qsrm/hermitian.hpp"
#include "support/oracles.hpp"

namespace qsrm {
namespace {

ComplexMatrix random_psd(Eigen::Index n, Eigen::Index rank, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix x(n, rank);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < rank; ++j) {
            x(i, j) = Complex(g(rng), g(rng));
        }
    }
    return x * x.adjoint();
}

TEST(HermEig, IdentityHasUnitSpectrum) {
    const HermEig eig = herm_eig(ComplexMatrix::Identity(3, 3));
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(eig.eigenvalues(i), 1.0, 1e-14);
    }
    EXPECT_LT(max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors - ComplexMatrix::Identity(3, 3)),
              1e-12);
}

TEST(HermEig, DiagonalSortedDescendingWithStandardBasis) {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = -1.0;
    a(1, 1) = 2.0;
    const HermEig eig = herm_eig(a);
    EXPECT_NEAR(eig.eigenvalues(0), 2.0, 1e-14);
    EXPECT_NEAR(eig.eigenvalues(1), -1.0, 1e-14);
    // Phase convention: largest component real positive.
    EXPECT_NEAR(eig.eigenvectors(1, 0).real(), 1.0, 1e-14);
    EXPECT_NEAR(eig.eigenvectors(0, 1).real(), 1.0, 1e-14);
}

TEST(HermEig, ReconstructsRandomHermitianAndPreservesTrace) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 2 + trial % 9;
        ComplexMatrix a = random_psd(n, n, rng) - random_psd(n, 2, rng);
        a = hermitian_part(a);
        const HermEig eig = herm_eig(a);
        const double scale = max_abs(a);
        const ComplexMatrix back =
            eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint();
        EXPECT_LT(max_abs(back - a), 1e-9 * scale);
        EXPECT_NEAR(eig.eigenvalues.sum(), a.trace().real(), 1e-10 * scale * n);
        for (Eigen::Index i = 1; i < n; ++i) {
            EXPECT_GE(eig.eigenvalues(i - 1), eig.eigenvalues(i));
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto v = eig.eigenvectors.col(i);
            EXPECT_LT((a * v - eig.eigenvalues(i) * v).cwiseAbs().maxCoeff(), 1e-10 * scale * n);
        }
    }
}

TEST(HermEig, RejectsNonSquareAndNonHermitian) {
    try {
        herm_eig(ComplexMatrix::Zero(2, 3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSquare);
    }
    ComplexMatrix a = ComplexMatrix::Identity(2, 2);
    a(0, 1) = 0.5;
    try {
        herm_eig(a);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(HermEig, PhaseConventionIsDeterministic) {
    std::mt19937_64 rng(11);
    const ComplexMatrix a = hermitian_part(random_psd(6, 6, rng));
    const HermEig first = herm_eig(a);
    const HermEig second = herm_eig(a);
    EXPECT_EQ(first.eigenvectors, second.eigenvectors);
    for (Eigen::Index j = 0; j < 6; ++j) {
        Eigen::Index best = 0;
        first.eigenvectors.col(j).cwiseAbs().maxCoeff(&best);
        EXPECT_NEAR(first.eigenvectors(best, j).imag(), 0.0, 1e-15);
        EXPECT_GT(first.eigenvectors(best, j).real(), 0.0);
    }
}

TEST(PsdSqrt, DiagonalRoots) {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 4.0;
    a(1, 1) = 9.0;
    const ComplexMatrix r = psd_sqrt_pm(a, RootPower::Half);
    EXPECT_NEAR(r(0, 0).real(), 2.0, 1e-14);
    EXPECT_NEAR(r(1, 1).real(), 3.0, 1e-14);
    EXPECT_NEAR(std::abs(r(0, 1)), 0.0, 1e-14);
}

TEST(PsdSqrt, PseudoInverseRootOfSingular) {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 4.0;
    const ComplexMatrix r = psd_sqrt_pm(a, RootPower::InverseHalf, 1e-12);
    EXPECT_NEAR(r(0, 0).real(), 0.5, 1e-14);
    EXPECT_NEAR(std::abs(r(1, 1)), 0.0, 1e-14);
}

TEST(PsdSqrt, BinaryPskGramRootHasCosineSineSpectrum) {
    // G = [[1, e^-2], [e^-2, 1]]: eigenvalues 1 ± e^-2 on (1, ±1)/√2.
    const double c = std::exp(-2.0);
    ComplexMatrix g(2, 2);
    g << 1.0, c, c, 1.0;
    const ComplexMatrix root = psd_sqrt_pm(g, RootPower::Half);
    const double a = std::sqrt(1.0 + c);
    const double b = std::sqrt(1.0 - c);
    EXPECT_NEAR(root(0, 0).real(), 0.5 * (a + b), 1e-14);
    EXPECT_NEAR(root(0, 1).real(), 0.5 * (a - b), 1e-14);
    EXPECT_LT(max_abs(root * root - g), 1e-14);
}

TEST(PsdSqrt, SquareReproducesRandomPsd) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 2 + trial % 12;
        const ComplexMatrix a = hermitian_part(random_psd(n, 1 + trial % static_cast<int>(n), rng));
        const ComplexMatrix r = psd_sqrt_pm(a, RootPower::Half);
        EXPECT_LT(max_abs(r * r - a), 1e-8 * max_abs(a));
        // Pseudo-inverse root: r_inv a r_inv is the projector onto range(a).
        const ComplexMatrix r_inv = psd_sqrt_pm(a, RootPower::InverseHalf);
        const ComplexMatrix p = r_inv * a * r_inv;
        EXPECT_LT(max_abs(p * p - p), 1e-8);
        EXPECT_LT(max_abs(p * a - a), 1e-8 * max_abs(a));
    }
}

TEST(PsdSqrt, NegativeEigenvalueIsRejected) {
    ComplexMatrix a = ComplexMatrix::Identity(2, 2);
    a(1, 1) = -0.5;
    try {
        psd_sqrt_pm(a, RootPower::Half);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeEigenvalue);
    }
}

TEST(LowRankFactor, PureStateHasRankOneAndMatchesKet) {
    const CoherentAmplitude gamma{Complex(0.7, -0.4)};
    const ComplexMatrix ket = coherent_ket(gamma, 12);
    const LowRankFactor f = low_rank_factor(ket * ket.adjoint(), 1e-10);
    ASSERT_EQ(f.rank(), 1);
    const Complex phase = (f.factor.adjoint() * ket)(0, 0);
    EXPECT_NEAR(std::abs(phase), ket.squaredNorm(), 1e-12);
    EXPECT_LT(max_abs(f.factor * (phase / std::abs(phase)) - ket), 1e-12);
}

TEST(LowRankFactor, WorkedPskDensityHasPracticalRankFive) {
    const DensityMatrix rho = thermal_density({Complex(1.0, 0.0)}, ThermalNoise(0.1), 8);
    EXPECT_EQ(low_rank_factor(rho.matrix(), 1e-5).rank(), 5);
}

TEST(LowRankFactor, MinimalRankUnderBothMetrics) {
    const DensityMatrix rho = thermal_density({Complex(2.0, 1.0)}, ThermalNoise(0.3), 24);
    for (ErrorMetric metric : {ErrorMetric::MaxAbs, ErrorMetric::MeanSquare}) {
        for (double nu : {1e-3, 1e-5, 1e-7}) {
            const LowRankFactor f = low_rank_factor(rho.matrix(), nu, metric);
            const ComplexMatrix residual = rho.matrix() - f.factor * f.factor.adjoint();
            EXPECT_LE(reconstruction_error(residual, metric), nu);
            EXPECT_NEAR(f.error, reconstruction_error(residual, metric), 1e-15);
            const std::vector<double> profile = rank_error_profile(rho.matrix(), metric);
            ASSERT_GE(f.rank(), 1);
            EXPECT_GT(profile[static_cast<std::size_t>(f.rank() - 1)], nu);
            // Columns are ordered by decreasing eigenvalue.
            for (Eigen::Index c = 1; c < f.rank(); ++c) {
                EXPECT_GE(f.factor.col(c - 1).squaredNorm(), f.factor.col(c).squaredNorm());
            }
        }
    }
}

TEST(LowRankFactor, MeanSquareIsNormalizedByEntryCount) {
    ComplexMatrix residual = ComplexMatrix::Zero(2, 2);
    residual(0, 1) = 2.0;
    EXPECT_DOUBLE_EQ(reconstruction_error(residual, ErrorMetric::MeanSquare), 1.0);
    EXPECT_DOUBLE_EQ(reconstruction_error(residual, ErrorMetric::MaxAbs), 2.0);
}

TEST(LowRankFactor, RejectsIndefiniteInput) {
    ComplexMatrix a = ComplexMatrix::Identity(3, 3);
    a(2, 2) = -0.1;
    try {
        low_rank_factor(a, 1e-5);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPSD);
    }
}

}  // namespace
}  // namespace qsrm
