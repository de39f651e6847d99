#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsrm/constellation.hpp"
#include "qsrm/glauber.hpp"
#include "qsrm/hermitian.hpp"

namespace qsrm {

/// n x r factor γ with ρ ≈ γγ*.
struct StateFactor {
    ComplexMatrix matrix;

    Eigen::Index dim() const { return matrix.rows(); }
    Eigen::Index rank() const { return matrix.cols(); }
};

/// Γ = [γ_0, ..., γ_{m-1}], blocks of possibly different widths sharing n
/// rows.
class StateMatrix {
  public:
    explicit StateMatrix(std::vector<StateFactor> blocks);

    std::size_t size() const { return blocks_.size(); }
    Eigen::Index dim() const { return gamma_.rows(); }
    Eigen::Index total_rank() const { return gamma_.cols(); }
    Eigen::Index offset(std::size_t i) const { return offsets_.at(i); }
    Eigen::Index rank(std::size_t i) const { return blocks_.at(i).rank(); }
    const StateFactor &block(std::size_t i) const { return blocks_.at(i); }
    const ComplexMatrix &gamma() const { return gamma_; }

  private:
    std::vector<StateFactor> blocks_;
    std::vector<Eigen::Index> offsets_;
    ComplexMatrix gamma_;
};

enum class Route {
    Auto, // ViaT when k > n, ViaG otherwise
    ViaT, // M = T^{-1/2} Γ
    ViaG, // M = Γ G^{-1/2}
};

std::string_view to_string(Route route);

struct DetectionMeta {
    int n = 0;
    double epsilon = 0.0;
    double nu = 0.0;
    std::vector<int> ranks;
    std::string route;
};

/// transition(i, j) = p(j|i), the probability of deciding j when i was sent.
struct DetectionResult {
    Eigen::MatrixXd transition;
    double pc = 0.0;
    double pe = 0.0;
    DetectionMeta meta;
};

void to_json(nlohmann::json &j, const DetectionResult &r);

/// G = Γ*Γ (k x k).
ComplexMatrix gram_matrix(const StateMatrix &states);

/// T = ΓΓ* (n x n).
ComplexMatrix gram_operator(const StateMatrix &states);

/// Square-root measurement factors μ_i, one n x r_i block per state.
std::vector<ComplexMatrix> measurement_factors(const StateMatrix &states,
                                               Route route = Route::Auto);

/// p(j|i) = ||B_ji||_F² with B = M*Γ = G^{1/2}; pc = Σ q_i p(i|i).
/// Only meta.route and meta.ranks are filled in.
DetectionResult transition_matrix(const StateMatrix &states, std::span<const double> priors,
                                  Route route = Route::Auto);

struct DetectionOptions {
    double epsilon = 1e-5;  // truncation accuracy
    double nu = 1e-5;       // practical-rank accuracy
    ErrorMetric metric = ErrorMetric::MaxAbs;
    int dimension = 0;      // 0 picks n from choose_truncation
    Route route = Route::Auto;
    bool renormalize = false; // rescale truncated densities to unit trace
};

StateFactor factor_state(const DensityMatrix &rho, double nu,
                         ErrorMetric metric = ErrorMetric::MaxAbs);

/// n = max_i choose_truncation(γ_i, noise, epsilon).
int shared_dimension(const Constellation &constellation, ThermalNoise noise, double epsilon);

/// Density matrices of every symbol, factored at the options' accuracy.
StateMatrix build_state_matrix(const Constellation &constellation, ThermalNoise noise, int n,
                               const DetectionOptions &options);

/// Full general-route pipeline: truncate, factor, square-root measurement.
DetectionResult evaluate_srm(const Constellation &constellation, ThermalNoise noise,
                             const DetectionOptions &options = {});

}  // namespace qsrm
