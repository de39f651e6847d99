#include "qsrm/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsrm/error.hpp"

namespace qsrm {

namespace {

void require_square(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        std::ostringstream msg;
        msg << "expected a square matrix, got " << a.rows() << "x" << a.cols();
        throw Error(ErrorCode::NotSquare, msg.str());
    }
}

void fix_phase(ComplexMatrix &vectors) {
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
        Eigen::Index best = 0;
        double best_abs = -1.0;
        for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
            const double mag = std::abs(vectors(i, j));
            // Tie-break on the first index, with slack for rounding.
            if (mag > best_abs * (1.0 + 1e-12)) {
                best_abs = mag;
                best = i;
            }
        }
        if (best_abs > 0.0) {
            const Complex c = vectors(best, j);
            vectors.col(j) *= std::conj(c) / std::abs(c);
            vectors(best, j) = Complex(std::abs(vectors(best, j)), 0.0);
        }
    }
}

// Subtracts λ u u* from `residual` in place.
void subtract_rank_one(ComplexMatrix &residual, double lambda, const Eigen::VectorXcd &u) {
    residual.noalias() -= lambda * (u * u.adjoint());
}

}  // namespace

double max_abs(const ComplexMatrix &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return a.cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    require_square(a);
    return (a + a.adjoint()) * 0.5;
}

double hermitian_defect(const ComplexMatrix &a) {
    require_square(a);
    return max_abs(a - a.adjoint());
}

HermEig herm_eig(const ComplexMatrix &a) {
    require_square(a);
    const double scale = max_abs(a);
    const double defect = hermitian_defect(a);
    if (defect > 1e-9 * scale) {
        std::ostringstream msg;
        msg << "Hermitian defect " << defect << " exceeds 1e-9 * " << scale;
        throw Error(ErrorCode::NotHermitian, msg.str());
    }

    const ComplexMatrix sym = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NoConvergence, "self-adjoint eigensolver did not converge");
    }

    HermEig out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    fix_phase(out.eigenvectors);
    return out;
}

ComplexMatrix psd_sqrt_pm(const ComplexMatrix &a, RootPower power, double cutoff) {
    const HermEig eig = herm_eig(a);
    if (cutoff < 0.0) {
        cutoff = 1e-12 * max_abs(a);
    }

    const Eigen::Index n = eig.eigenvalues.size();
    RealVector root(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double lambda = eig.eigenvalues(i);
        if (lambda < -cutoff) {
            std::ostringstream msg;
            msg << "eigenvalue " << lambda << " below -" << cutoff;
            throw Error(ErrorCode::NegativeEigenvalue, msg.str());
        }
        if (power == RootPower::Half) {
            root(i) = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
        } else {
            root(i) = lambda > cutoff ? 1.0 / std::sqrt(lambda) : 0.0;
        }
    }
    const ComplexMatrix &v = eig.eigenvectors;
    return v * root.asDiagonal() * v.adjoint();
}

double reconstruction_error(const ComplexMatrix &residual, ErrorMetric metric) {
    if (residual.size() == 0) {
        return 0.0;
    }
    switch (metric) {
        case ErrorMetric::MaxAbs:
            return max_abs(residual);
        case ErrorMetric::MeanSquare: {
            const double n2 = static_cast<double>(residual.rows()) * residual.cols();
            return residual.cwiseAbs2().sum() / n2;
        }
    }
    return 0.0;
}

namespace {

HermEig checked_density_eig(const ComplexMatrix &rho) {
    HermEig eig = herm_eig(rho);
    const double floor = -1e-10 * std::max(1.0, max_abs(rho));
    if (eig.eigenvalues.size() > 0 && eig.eigenvalues(eig.eigenvalues.size() - 1) < floor) {
        std::ostringstream msg;
        msg << "smallest eigenvalue " << eig.eigenvalues(eig.eigenvalues.size() - 1)
            << " is below " << floor;
        throw Error(ErrorCode::NotPSD, msg.str());
    }
    return eig;
}

}  // namespace

LowRankFactor low_rank_factor(const ComplexMatrix &rho, double nu, ErrorMetric metric) {
    if (!(nu >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "accuracy nu must be non-negative");
    }
    HermEig eig = checked_density_eig(rho);
    const Eigen::Index n = eig.eigenvalues.size();

    ComplexMatrix residual = hermitian_part(rho);
    Eigen::Index rank = 0;
    double error = reconstruction_error(residual, metric);
    for (Eigen::Index r = 0; r < n; ++r) {
        const double lambda = eig.eigenvalues(r);
        if (lambda <= 0.0) {
            break;
        }
        subtract_rank_one(residual, lambda, eig.eigenvectors.col(r));
        rank = r + 1;
        error = reconstruction_error(residual, metric);
        if (error <= nu) {
            break;
        }
    }

    LowRankFactor out;
    out.factor = eig.eigenvectors.leftCols(rank) *
                 eig.eigenvalues.head(rank).cwiseSqrt().asDiagonal();
    out.eigenvalues = std::move(eig.eigenvalues);
    out.error = error;
    return out;
}

std::vector<double> rank_error_profile(const ComplexMatrix &rho, ErrorMetric metric) {
    const HermEig eig = checked_density_eig(rho);
    ComplexMatrix residual = hermitian_part(rho);
    std::vector<double> profile;
    profile.reserve(static_cast<std::size_t>(eig.eigenvalues.size()) + 1);
    profile.push_back(reconstruction_error(residual, metric));
    for (Eigen::Index r = 0; r < eig.eigenvalues.size(); ++r) {
        const double lambda = eig.eigenvalues(r);
        if (lambda > 0.0) {
            subtract_rank_one(residual, lambda, eig.eigenvectors.col(r));
        }
        profile.push_back(reconstruction_error(residual, metric));
    }
    return profile;
}

}  // namespace qsrm
