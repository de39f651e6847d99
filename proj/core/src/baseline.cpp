#include "qsrm/baseline.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qsrm/error.hpp"

namespace qsrm {

HomodyneModel HomodyneModel::make(double ns, double noise) {
    if (!(ns > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "photons per symbol must be > 0");
    }
    if (!(noise >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "thermal photons must be >= 0");
    }
    return HomodyneModel{4.0 * ns / (1.0 + 2.0 * noise), (1.0 + 2.0 * noise) / 4.0};
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

namespace {

// Craig's form of the m-PSK symbol error for a complex Gaussian with
// per-quadrature variance sigma2 around a point at radius sqrt(ns).
double psk_symbol_error(int m, double ns, double sigma2) {
    const double es_n0 = ns / (2.0 * sigma2);
    const double s2 = std::pow(std::sin(std::numbers::pi / m), 2);
    auto integrand = [&](double theta) {
        const double st = std::sin(theta);
        if (st == 0.0) {
            return 0.0;
        }
        return std::exp(-es_n0 * s2 / (st * st));
    };
    double error = 0.0;
    const double upper = std::numbers::pi - std::numbers::pi / m;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, upper, 15, 1e-13, &error);
    return integral / std::numbers::pi;
}

}  // namespace

double homodyne_pe(const Modulation &modulation, double ns, double noise) {
    const HomodyneModel model = HomodyneModel::make(ns, noise);
    const double sigma = std::sqrt(model.per_quadrature_sigma2);
    if (modulation.kind == Modulation::Kind::Psk) {
        if (modulation.size < 2) {
            throw Error(ErrorCode::InvalidArgument, "PSK order must be >= 2");
        }
        if (modulation.size == 2) {
            return q_function(std::sqrt(model.snr));
        }
        return psk_symbol_error(modulation.size, ns, model.per_quadrature_sigma2);
    }
    const int side = modulation.size;
    if (side < 2) {
        throw Error(ErrorCode::InvalidArgument, "QAM side must be >= 2");
    }
    // Neighbouring levels sit 2Δ apart, so each decision boundary is Δ away.
    const double delta = qam_scale(side, ns);
    const double per_axis = 2.0 * (1.0 - 1.0 / side) * q_function(delta / sigma);
    return 1.0 - (1.0 - per_axis) * (1.0 - per_axis);
}

double helstrom_binary_pe(const DensityMatrix &rho0, const DensityMatrix &rho1, double q0,
                          double q1) {
    if (rho0.dim() != rho1.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrices differ in dimension");
    }
    if (!(q0 >= 0.0 && q1 >= 0.0) || std::abs(q0 + q1 - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "priors must be non-negative and sum to 1");
    }
    const ComplexMatrix a = q1 * rho1.matrix() - q0 * rho0.matrix();
    const HermEig eig = herm_eig(hermitian_part(a));
    double positive = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        positive += std::max(eig.eigenvalues(i), 0.0);
    }
    return 1.0 - q0 * rho0.trace() - positive;
}

}  // namespace qsrm
