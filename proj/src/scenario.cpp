#include "dimwit/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace dimwit {

namespace {

// Quantum evaluation may drift past [0,1] by round-off; anything further out
// means the strategy itself was invalid.
constexpr double kClampLimit = 1e-6;

std::string index_msg(const char* what, std::size_t i, const char* problem) {
    return std::string(what) + " " + std::to_string(i) + " " + problem;
}

}  // namespace

Behavior::Behavior(RealMatrix p0) : p0_(std::move(p0)) {
    if (p0_.rows() < 1 || p0_.cols() < 1) throw std::invalid_argument("behavior must be non-empty");
    for (Eigen::Index x = 0; x < p0_.rows(); ++x) {
        for (Eigen::Index y = 0; y < p0_.cols(); ++y) {
            const double p = p0_(x, y);
            if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
                throw std::invalid_argument("behavior entry (" + std::to_string(x) + "," + std::to_string(y) +
                                            ") = " + std::to_string(p) + " is not a probability");
            }
        }
    }
}

bool is_valid_effect(const HermitianMatrix& m, double tol) {
    if (!is_hermitian(m)) return false;
    const HermitianMatrix complement = HermitianMatrix::Identity(m.rows(), m.cols()) - m;
    return is_psd(m, tol) && is_psd(complement, tol);
}

void QuantumStrategy::validate(double tol) const {
    if (dim < 1) throw std::invalid_argument("quantum strategy dimension must be positive");
    for (std::size_t x = 0; x < states.size(); ++x) {
        const auto& rho = states[x];
        if (rho.rows() != dim || rho.cols() != dim) throw std::invalid_argument(index_msg("state", x, "has wrong size"));
        if (!is_hermitian(rho)) throw std::invalid_argument(index_msg("state", x, "is not Hermitian"));
        if (std::abs(rho.trace().real() - 1.0) > tol) throw std::invalid_argument(index_msg("state", x, "does not have unit trace"));
        if (!is_psd(rho, tol)) throw std::invalid_argument(index_msg("state", x, "is not positive semidefinite"));
    }
    for (std::size_t y = 0; y < effects.size(); ++y) {
        const auto& m = effects[y];
        if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument(index_msg("effect", y, "has wrong size"));
        if (!is_valid_effect(m, tol)) throw std::invalid_argument(index_msg("effect", y, "is not between 0 and I"));
    }
}

void ClassicalStrategy::validate(double tol) const {
    if (dim < 1) throw std::invalid_argument("classical strategy dimension must be positive");
    if (s.rows() != dim || t0.rows() != dim) throw std::invalid_argument("classical strategy tables must have dim rows");
    for (Eigen::Index x = 0; x < s.cols(); ++x) {
        if ((s.col(x).array() < -tol).any() || (s.col(x).array() > 1.0 + tol).any()) {
            throw std::invalid_argument(index_msg("message distribution", static_cast<std::size_t>(x), "has entries outside [0,1]"));
        }
        if (std::abs(s.col(x).sum() - 1.0) > tol) {
            throw std::invalid_argument(index_msg("message distribution", static_cast<std::size_t>(x), "does not sum to 1"));
        }
    }
    if ((t0.array() < -tol).any() || (t0.array() > 1.0 + tol).any()) {
        throw std::invalid_argument("response table has entries outside [0,1]");
    }
}

Behavior behavior_from_quantum(const QuantumStrategy& strategy) {
    strategy.validate();
    const auto nx = static_cast<Eigen::Index>(strategy.states.size());
    const auto ny = static_cast<Eigen::Index>(strategy.effects.size());
    RealMatrix p0(nx, ny);
    for (Eigen::Index x = 0; x < nx; ++x) {
        for (Eigen::Index y = 0; y < ny; ++y) {
            const double p = (strategy.states[static_cast<std::size_t>(x)] * strategy.effects[static_cast<std::size_t>(y)])
                                 .trace()
                                 .real();
            if (p < -kClampLimit || p > 1.0 + kClampLimit) {
                throw std::invalid_argument("quantum probability " + std::to_string(p) + " far outside [0,1]");
            }
            p0(x, y) = std::clamp(p, 0.0, 1.0);
        }
    }
    return Behavior(std::move(p0));
}

Behavior behavior_from_classical(const ClassicalStrategy& strategy) {
    strategy.validate();
    RealMatrix p0 = strategy.s.transpose() * strategy.t0;
    return Behavior(p0.cwiseMax(0.0).cwiseMin(1.0));
}

HermitianMatrix bloch_to_state(const RealVector& v, const GellMannBasis& basis) {
    if (v.norm() > 1.0 + 1e-12) throw std::invalid_argument("Bloch vector norm exceeds 1");
    const int d = basis.dim;
    return (HermitianMatrix::Identity(d, d) + basis.phi_d * basis.combine(v)) / static_cast<double>(d);
}

RealVector state_to_bloch(const HermitianMatrix& rho, const GellMannBasis& basis) {
    return basis.coefficients(rho) * (basis.dim / basis.phi_d);
}

HermitianMatrix vector_to_effect(double c, const RealVector& v, const GellMannBasis& basis) {
    if (std::abs(c) > 1.0) throw std::invalid_argument("effect offset |c| exceeds 1");
    if (v.norm() > 1.0 + 1e-12) throw std::invalid_argument("effect vector norm exceeds 1");
    const int d = basis.dim;
    return c * HermitianMatrix::Identity(d, d) + (basis.phi_d / d) * basis.combine(v);
}

Behavior apply_noise(const Behavior& behavior, double eta, const std::vector<double>& noise) {
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0,1]");
    if (static_cast<int>(noise.size()) != behavior.num_measurements()) {
        throw ShapeError("noise vector has " + std::to_string(noise.size()) + " entries, expected " +
                         std::to_string(behavior.num_measurements()));
    }
    for (double p : noise) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise probabilities must lie in [0,1]");
    }
    RealMatrix out = eta * behavior.p0();
    for (Eigen::Index y = 0; y < out.cols(); ++y) out.col(y).array() += (1.0 - eta) * noise[static_cast<std::size_t>(y)];
    return Behavior(out.cwiseMax(0.0).cwiseMin(1.0));
}

}  // namespace dimwit
