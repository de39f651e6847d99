#pragma once

// Reference values for the 4-PSK, 16-QAM and rank worked examples. The
// matrices are given to three decimals.

#include <array>

namespace qsrm::worked {

// 4-PSK, Ns = 1, N = 0.1, n = 8.
inline constexpr int kPskOrder = 4;
inline constexpr double kPskNs = 1.0;
inline constexpr double kPskNoise = 0.1;
inline constexpr int kPskDim = 8;
inline constexpr int kPskRank = 5;

inline constexpr std::array<std::array<double, 8>, 8> kRho0{{
    {0.366, 0.333, 0.214, 0.112, 0.051, 0.021, 0.008, 0.003},
    {0.333, 0.336, 0.237, 0.136, 0.067, 0.029, 0.012, 0.004},
    {0.214, 0.237, 0.183, 0.114, 0.060, 0.028, 0.012, 0.005},
    {0.112, 0.136, 0.114, 0.076, 0.044, 0.022, 0.010, 0.004},
    {0.051, 0.067, 0.060, 0.044, 0.027, 0.014, 0.007, 0.003},
    {0.021, 0.029, 0.028, 0.022, 0.014, 0.008, 0.004, 0.002},
    {0.008, 0.012, 0.012, 0.010, 0.007, 0.004, 0.002, 0.001},
    {0.003, 0.004, 0.005, 0.004, 0.003, 0.002, 0.001, 0.001},
}};

// Factor of ρ0 scaled by the prior weight 1/√m.
inline constexpr std::array<std::array<double, 5>, 8> kGamma0{{
    {-0.289, 0.087, -0.019, -0.003, 0.000},
    {-0.289, 0.000, 0.019, 0.006, 0.001},
    {-0.204, -0.062, 0.013, -0.002, -0.002},
    {-0.118, -0.071, -0.008, -0.005, 0.000},
    {-0.059, -0.053, -0.019, 0.000, 0.001},
    {-0.026, -0.032, -0.019, 0.004, 0.000},
    {-0.011, -0.016, -0.013, 0.006, -0.001},
    {-0.004, -0.007, -0.008, 0.005, -0.002},
}};

inline constexpr std::array<std::array<double, 5>, 5> kD0{{
    {0.348, -0.088, 0.026, 0.004, 0.000},
    {-0.088, 0.042, -0.002, -0.001, 0.000},
    {0.026, -0.002, 0.003, 0.000, 0.000},
    {0.004, -0.001, 0.000, 0.000, 0.000},
    {0.000, 0.000, 0.000, 0.000, 0.000},
}};

inline constexpr std::array<std::array<double, 5>, 5> kD0Sqrt{{
    {0.576, -0.121, 0.048, 0.006, 0.000},
    {-0.121, 0.164, 0.020, -0.002, -0.003},
    {0.048, 0.020, 0.010, 0.000, -0.001},
    {0.006, -0.002, 0.000, 0.000, 0.000},
    {0.000, -0.003, -0.001, 0.000, 0.000},
}};

inline constexpr std::array<double, 4> kPskRow{0.80703, 0.08622, 0.02034, 0.08622};
inline constexpr double kPskPc = 0.80703;
inline constexpr double kPskPe = 0.19297;
inline constexpr double kPskTol = 1e-4;
inline constexpr double kMatrixTol = 5e-4;

// 16-QAM, Ns = 4, N = 0.1, n = 40.
inline constexpr int kQamSide = 4;
inline constexpr double kQamNs = 4.0;
inline constexpr double kQamNoise = 0.1;
inline constexpr int kQamDim = 40;
inline constexpr double kQamInner = 0.875749;
inline constexpr double kQamSideState = 0.916501;
inline constexpr double kQamCorner = 0.947767;
inline constexpr double kQamPe = 0.08587;
inline constexpr double kQamTol = 2e-4;
// Ns that gives the unit spacing Δ = 1 for 16-QAM.
inline constexpr double kQamUnitSpacingNs = 10.0;

// Rank example, ρ(√5), N = 0.1, n = 20.
inline constexpr double kRankPhotons = 5.0;
inline constexpr double kRankNoise = 0.1;
inline constexpr int kRankDim = 20;
inline constexpr double kRankNu = 1e-5;
inline constexpr std::array<double, 3> kRankEigenvalues{0.150285, 0.00231095, 3.53779e-5};
inline constexpr double kRankRelTol = 1e-6;
inline constexpr int kRankPractical = 3;
// The reference eigenvalues are those of the amplitude 5 state (N_γ = 25) at
// the same n; its max-entry rank reaches 3 at ν = 1e-7.
inline constexpr double kRankReproAmplitude = 5.0;
inline constexpr double kRankReproNu = 1e-7;
inline constexpr double kRankPrintRelTol = 2.5e-6;

}  // namespace qsrm::worked
