#include "qsrm/gus.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qsrm/error.hpp"

namespace qsrm {

namespace {

Complex root_of_unity(long long exponent, int m) {
    const long long e = ((exponent % m) + m) % m;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / m);
}

}  // namespace

GusSpectrum gus_blocks(const StateFactor &gamma0, int m) {
    if (m < 2) {
        throw Error(ErrorCode::DimensionMismatch, "GUS order must be >= 2");
    }
    if (gamma0.rank() == 0 || gamma0.dim() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "empty generating factor");
    }
    const Eigen::Index n = gamma0.dim();
    const Eigen::Index h = gamma0.rank();

    GusSpectrum spectrum;
    spectrum.m = m;
    spectrum.h = h;
    spectrum.blocks.assign(static_cast<std::size_t>(m), ComplexMatrix::Zero(h, h));
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto row = gamma0.matrix.row(j);
        spectrum.blocks[static_cast<std::size_t>(j % m)].noalias() += row.adjoint() * row;
    }
    for (ComplexMatrix &d : spectrum.blocks) {
        d = hermitian_part(d) * static_cast<double>(m);
    }
    return spectrum;
}

std::vector<ComplexMatrix> gus_sqrt_blocks(const GusSpectrum &spectrum) {
    std::vector<ComplexMatrix> roots;
    roots.reserve(spectrum.blocks.size());
    for (const ComplexMatrix &d : spectrum.blocks) {
        roots.push_back(psd_sqrt_pm(d, RootPower::Half));
    }
    return roots;
}

ComplexMatrix circulant_block(const std::vector<ComplexMatrix> &dft_blocks, int r, int s) {
    const int m = static_cast<int>(dft_blocks.size());
    ComplexMatrix out = ComplexMatrix::Zero(dft_blocks.front().rows(), dft_blocks.front().cols());
    for (int k = 0; k < m; ++k) {
        out += root_of_unity(static_cast<long long>(s - r) * k, m) *
               dft_blocks[static_cast<std::size_t>(k)];
    }
    return out / static_cast<double>(m);
}

ComplexMatrix assemble_circulant(const std::vector<ComplexMatrix> &dft_blocks) {
    const int m = static_cast<int>(dft_blocks.size());
    const Eigen::Index h = dft_blocks.front().rows();
    ComplexMatrix full(m * h, m * h);
    for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) {
            full.block(r * h, s * h, h, h) = circulant_block(dft_blocks, r, s);
        }
    }
    return full;
}

DetectionResult gus_transition(const GusSpectrum &spectrum) {
    const int m = spectrum.m;
    const std::vector<ComplexMatrix> roots = gus_sqrt_blocks(spectrum);

    // p(j|i) depends only on the lag (i - j) mod m.
    std::vector<double> by_lag(static_cast<std::size_t>(m));
    for (int lag = 0; lag < m; ++lag) {
        by_lag[static_cast<std::size_t>(lag)] = circulant_block(roots, 0, lag).squaredNorm();
    }

    DetectionResult result;
    result.transition.resize(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            result.transition(i, j) = by_lag[static_cast<std::size_t>(((i - j) % m + m) % m)];
        }
    }
    result.pc = by_lag[0];
    result.pe = 1.0 - result.pc;
    result.meta.ranks.assign(static_cast<std::size_t>(m), static_cast<int>(spectrum.h));
    result.meta.route = "gus";
    return result;
}

ComplexMatrix rotate_factor(const ComplexMatrix &gamma0, int power, int m) {
    ComplexMatrix out = gamma0;
    for (Eigen::Index j = 0; j < out.rows(); ++j) {
        out.row(j) *= root_of_unity(static_cast<long long>(power) * j, m);
    }
    return out;
}

DetectionResult evaluate_gus(const Constellation &constellation, ThermalNoise noise,
                             const DetectionOptions &options) {
    if (!constellation.gus || constellation.generator_order != static_cast<int>(constellation.size())) {
        throw Error(ErrorCode::InvalidArgument, "constellation " + constellation.label +
                                                    " is not a geometrically uniform PSK set");
    }
    const CoherentAmplitude gamma0 = constellation.amplitude(0);
    const int n = options.dimension > 0 ? options.dimension
                                        : choose_truncation(gamma0, noise, options.epsilon);
    DensityMatrix rho0 = thermal_density(gamma0, noise, n);
    if (options.renormalize) {
        rho0 = rho0.normalized();
    }
    const StateFactor factor = factor_state(rho0, options.nu, options.metric);
    DetectionResult result = gus_transition(gus_blocks(factor, constellation.generator_order));
    result.meta.n = n;
    result.meta.epsilon = options.epsilon;
    result.meta.nu = options.nu;
    return result;
}

}  // namespace qsrm
