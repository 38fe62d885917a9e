#include <cmath>

#include "dimwit/optimize.hpp"
#include "restarts.hpp"

namespace dimwit {

namespace {

RealMatrix quantum_witness_matrix(const QuantumStrategy& q, int k) {
    RealMatrix w(k, k);
    for (int j = 0; j < k; ++j) {
        const HermitianMatrix diff = q.states[static_cast<std::size_t>(2 * j)] - q.states[static_cast<std::size_t>(2 * j + 1)];
        for (int i = 0; i < k; ++i) w(i, j) = (diff * q.effects[static_cast<std::size_t>(i)]).trace().real();
    }
    return w;
}

}  // namespace

HermitianMatrix best_effect(const HermitianMatrix& a) {
    const auto eig = hermitian_eigen(a);
    const auto d = a.rows();
    HermitianMatrix positive = HermitianMatrix::Zero(d, d);
    HermitianMatrix negative = HermitianMatrix::Zero(d, d);
    double gain = 0.0;
    double loss = 0.0;
    for (Eigen::Index n = 0; n < d; ++n) {
        const double lambda = eig.values(n);
        const auto v = eig.vectors.col(n);
        if (lambda > 0.0) {
            positive += v * v.adjoint();
            gain += lambda;
        } else if (lambda < 0.0) {
            negative += v * v.adjoint();
            loss -= lambda;
        }
    }
    return gain >= loss ? positive : negative;
}

double seesaw_quantum_polish(QuantumStrategy& q, int k, const OptimizerConfig& cfg, int* iterations, bool* converged,
                             SeesawTrace* trace) {
    if (static_cast<int>(q.states.size()) != 2 * k || static_cast<int>(q.effects.size()) != k) {
        throw ShapeError("see-saw needs 2k states and k effects");
    }
    RealMatrix w = quantum_witness_matrix(q, k);
    double signed_det = determinant(w);
    double current = std::abs(signed_det);
    if (trace) trace->values.push_back(current);

    const auto accept_if_better = [&](auto&& apply, auto&& undo) {
        apply();
        RealMatrix candidate = quantum_witness_matrix(q, k);
        const double det = determinant(candidate);
        if (std::abs(det) >= current) {
            w = std::move(candidate);
            signed_det = det;
            current = std::abs(det);
        } else {
            undo();
        }
        if (trace) trace->values.push_back(current);
    };

    bool done = false;
    int it = 0;
    while (it < cfg.max_iterations && !done) {
        ++it;
        const double before = current;

        for (int i = 0; i < k; ++i) {
            const RealMatrix c = cofactors(w);
            HermitianMatrix a = HermitianMatrix::Zero(q.dim, q.dim);
            for (int j = 0; j < k; ++j) {
                a += c(i, j) * (q.states[static_cast<std::size_t>(2 * j)] - q.states[static_cast<std::size_t>(2 * j + 1)]);
            }
            auto& effect = q.effects[static_cast<std::size_t>(i)];
            HermitianMatrix previous = effect;
            accept_if_better([&] { effect = best_effect(a); }, [&] { effect = previous; });
        }

        for (int j = 0; j < k; ++j) {
            const RealMatrix c = cofactors(w);
            HermitianMatrix b = HermitianMatrix::Zero(q.dim, q.dim);
            for (int i = 0; i < k; ++i) b += c(i, j) * q.effects[static_cast<std::size_t>(i)];
            const auto eig = hermitian_eigen(b);
            const auto low = eig.vectors.col(0);
            const auto high = eig.vectors.col(q.dim - 1);
            auto& even = q.states[static_cast<std::size_t>(2 * j)];
            auto& odd = q.states[static_cast<std::size_t>(2 * j + 1)];
            HermitianMatrix prev_even = even;
            HermitianMatrix prev_odd = odd;
            const bool flip = signed_det < 0.0;
            accept_if_better(
                [&] {
                    even = flip ? HermitianMatrix(low * low.adjoint()) : HermitianMatrix(high * high.adjoint());
                    odd = flip ? HermitianMatrix(high * high.adjoint()) : HermitianMatrix(low * low.adjoint());
                },
                [&] {
                    even = prev_even;
                    odd = prev_odd;
                });
        }

        done = current - before < cfg.convergence_tol;
    }
    if (iterations) *iterations = it;
    if (converged) *converged = done;
    return current;
}

namespace {

OptimizationResult quantum_driver(int d, int k, const OptimizerConfig& cfg, bool parallel) {
    cfg.validate();
    if (d < 2) throw std::invalid_argument("quantum optimization needs d >= 2");
    if (k < 1) throw std::invalid_argument("witness order k must be positive");
    const auto outcomes = detail::run_restarts(cfg.restarts, cfg.threads, parallel, [&](int r) {
        auto rng = restart_rng(cfg.seed, static_cast<std::uint64_t>(r));
        QuantumStrategy q = random_quantum_strategy(d, 2 * k, k, rng);
        detail::RunOutcome out;
        out.value = seesaw_quantum_polish(q, k, cfg, &out.iterations, &out.converged);
        out.strategy = std::move(q);
        return out;
    });
    OptimizationResult result;
    detail::merge_outcomes(outcomes, result);
    return result;
}

}  // namespace

OptimizationResult maximize_witness_quantum(int d, int k, const OptimizerConfig& cfg) {
    return quantum_driver(d, k, cfg, true);
}

namespace reference {

OptimizationResult maximize_witness_quantum_serial(int d, int k, const OptimizerConfig& cfg) {
    return quantum_driver(d, k, cfg, false);
}

}  // namespace reference

}  // namespace dimwit
