#pragma once

#include <vector>

#include "qsrm/srm.hpp"

namespace qsrm {

/// Diagonal blocks D_k (h x h) of a block-circulant Gram matrix, for a
/// constellation γ_i = S^i γ_0 with S = diag(W_m^j) in the number basis.
struct GusSpectrum {
    int m = 0;
    Eigen::Index h = 0;
    std::vector<ComplexMatrix> blocks;
};

/// D_k = γ_0* L_k γ_0 with L_k = m diag[δ(k, j mod m)]. Throws
/// DimensionMismatch for an empty factor or m < 2.
GusSpectrum gus_blocks(const StateFactor &gamma0, int m);

/// D_k^{1/2} for every block.
std::vector<ComplexMatrix> gus_sqrt_blocks(const GusSpectrum &spectrum);

/// (1/m) Σ_k W_m^{(s-r)k} X_k: the (r, s) block of the block-circulant
/// matrix whose DFT blocks are X_k.
ComplexMatrix circulant_block(const std::vector<ComplexMatrix> &dft_blocks, int r, int s);

/// Full mh x mh block-circulant matrix built from its DFT blocks.
ComplexMatrix assemble_circulant(const std::vector<ComplexMatrix> &dft_blocks);

/// Circulant transition matrix and Pc = p(i|i) from the square-root blocks.
DetectionResult gus_transition(const GusSpectrum &spectrum);

/// S^power γ_0 with S = diag(W_m^j).
ComplexMatrix rotate_factor(const ComplexMatrix &gamma0, int power, int m);

/// PSK pipeline via the generating density only. Requires a GUS
/// constellation.
DetectionResult evaluate_gus(const Constellation &constellation, ThermalNoise noise,
                             const DetectionOptions &options = {});

}  // namespace qsrm
