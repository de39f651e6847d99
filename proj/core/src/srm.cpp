#include "qsrm/srm.hpp"

#include <algorithm>
#include <sstream>

#include "qsrm/error.hpp"

namespace qsrm {

namespace {

Route resolve(Route route, const StateMatrix &states) {
    if (route != Route::Auto) {
        return route;
    }
    return states.total_rank() > states.dim() ? Route::ViaT : Route::ViaG;
}

std::vector<int> ranks_of(const StateMatrix &states) {
    std::vector<int> ranks;
    ranks.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        ranks.push_back(static_cast<int>(states.rank(i)));
    }
    return ranks;
}

}  // namespace

StateMatrix::StateMatrix(std::vector<StateFactor> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "state matrix needs at least one block");
    }
    const Eigen::Index n = blocks_.front().dim();
    Eigen::Index k = 0;
    for (const StateFactor &b : blocks_) {
        if (b.dim() != n) {
            std::ostringstream msg;
            msg << "state factor has " << b.dim() << " rows, expected " << n;
            throw Error(ErrorCode::DimensionMismatch, msg.str());
        }
        offsets_.push_back(k);
        k += b.rank();
    }
    gamma_.resize(n, k);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        gamma_.middleCols(offsets_[i], blocks_[i].rank()) = blocks_[i].matrix;
    }
}

std::string_view to_string(Route route) {
    switch (route) {
        case Route::Auto:
            return "auto";
        case Route::ViaT:
            return "via_T";
        case Route::ViaG:
            return "via_G";
    }
    return "auto";
}

void to_json(nlohmann::json &j, const DetectionResult &r) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < r.transition.rows(); ++i) {
        std::vector<double> row(static_cast<std::size_t>(r.transition.cols()));
        for (Eigen::Index c = 0; c < r.transition.cols(); ++c) {
            row[static_cast<std::size_t>(c)] = r.transition(i, c);
        }
        rows.push_back(row);
    }
    j = nlohmann::json{{"transition", rows},
                       {"pc", r.pc},
                       {"pe", r.pe},
                       {"meta",
                        {{"n", r.meta.n},
                         {"epsilon", r.meta.epsilon},
                         {"nu", r.meta.nu},
                         {"ranks", r.meta.ranks},
                         {"route", r.meta.route}}}};
}

ComplexMatrix gram_matrix(const StateMatrix &states) {
    return states.gamma().adjoint() * states.gamma();
}

ComplexMatrix gram_operator(const StateMatrix &states) {
    return states.gamma() * states.gamma().adjoint();
}

std::vector<ComplexMatrix> measurement_factors(const StateMatrix &states, Route route) {
    const ComplexMatrix &gamma = states.gamma();
    ComplexMatrix m;
    if (resolve(route, states) == Route::ViaT) {
        m = psd_sqrt_pm(hermitian_part(gram_operator(states)), RootPower::InverseHalf) * gamma;
    } else {
        m = gamma * psd_sqrt_pm(hermitian_part(gram_matrix(states)), RootPower::InverseHalf);
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        blocks.emplace_back(m.middleCols(states.offset(i), states.rank(i)));
    }
    return blocks;
}

DetectionResult transition_matrix(const StateMatrix &states, std::span<const double> priors,
                                  Route route) {
    const std::size_t m = states.size();
    if (priors.size() != m) {
        throw Error(ErrorCode::DimensionMismatch, "one prior per state is required");
    }
    const Route used = resolve(route, states);

    // X = M*Γ, which equals G^{1/2} on the span of the states.
    ComplexMatrix x;
    if (used == Route::ViaT) {
        const ComplexMatrix t_inv_half =
            psd_sqrt_pm(hermitian_part(gram_operator(states)), RootPower::InverseHalf);
        const ComplexMatrix measurement = t_inv_half * states.gamma();
        x = measurement.adjoint() * states.gamma();
    } else {
        x = psd_sqrt_pm(hermitian_part(gram_matrix(states)), RootPower::Half);
    }

    DetectionResult result;
    result.transition.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto block =
                x.block(states.offset(j), states.offset(i), states.rank(j), states.rank(i));
            result.transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                block.squaredNorm();
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        result.pc += priors[i] * result.transition(static_cast<Eigen::Index>(i),
                                                   static_cast<Eigen::Index>(i));
    }
    result.pe = 1.0 - result.pc;
    result.meta.n = static_cast<int>(states.dim());
    result.meta.ranks = ranks_of(states);
    result.meta.route = std::string(to_string(used));
    return result;
}

StateFactor factor_state(const DensityMatrix &rho, double nu, ErrorMetric metric) {
    return StateFactor{low_rank_factor(rho.matrix(), nu, metric).factor};
}

int shared_dimension(const Constellation &constellation, ThermalNoise noise, double epsilon) {
    int n = 1;
    for (std::size_t i = 0; i < constellation.size(); ++i) {
        n = std::max(n, choose_truncation(constellation.amplitude(i), noise, epsilon));
    }
    return n;
}

StateMatrix build_state_matrix(const Constellation &constellation, ThermalNoise noise, int n,
                               const DetectionOptions &options) {
    std::vector<StateFactor> factors;
    factors.reserve(constellation.size());
    for (std::size_t i = 0; i < constellation.size(); ++i) {
        DensityMatrix rho = thermal_density(constellation.amplitude(i), noise, n);
        if (options.renormalize) {
            rho = rho.normalized();
        }
        factors.push_back(factor_state(rho, options.nu, options.metric));
    }
    return StateMatrix(std::move(factors));
}

DetectionResult evaluate_srm(const Constellation &constellation, ThermalNoise noise,
                             const DetectionOptions &options) {
    const int n = options.dimension > 0
                      ? options.dimension
                      : shared_dimension(constellation, noise, options.epsilon);
    const StateMatrix states = build_state_matrix(constellation, noise, n, options);
    DetectionResult result = transition_matrix(states, constellation.priors, options.route);
    result.meta.epsilon = options.epsilon;
    result.meta.nu = options.nu;
    return result;
}

}  // namespace qsrm
