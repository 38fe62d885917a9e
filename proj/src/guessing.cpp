#include <array>
#include <cmath>
#include <numbers>

#include <gsl/gsl_multimin.h>

#include "dimwit/optimize.hpp"
#include "restarts.hpp"

namespace dimwit {

namespace {

struct QubitModel {
    std::array<Eigen::Vector3d, 4> s;
    std::array<double, 2> c;
    std::array<Eigen::Vector3d, 2> t;

    double p(int x, int y) const { return c[static_cast<std::size_t>(y)] + 0.5 * s[static_cast<std::size_t>(x)].dot(t[static_cast<std::size_t>(y)]); }

    double witness() const {
        return (p(0, 0) - p(1, 0)) * (p(2, 1) - p(3, 1)) - (p(2, 0) - p(3, 0)) * (p(0, 1) - p(1, 1));
    }

    double guessing() const {
        double sum = 0.0;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) sum += std::max(p(x, y), 1.0 - p(x, y));
        }
        return 0.25 * sum;
    }
};

Eigen::Vector3d unit(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

QubitModel model_from(const double* p) {
    QubitModel m;
    for (int x = 0; x < 4; ++x) m.s[static_cast<std::size_t>(x)] = unit(p[2 * x], p[2 * x + 1]);
    for (int y = 0; y < 2; ++y) {
        const double* e = p + 8 + 4 * y;
        const double upper = std::pow(std::sin(e[0]), 2);
        const double lower = std::pow(std::sin(e[1]), 2);
        m.c[static_cast<std::size_t>(y)] = 0.5 * (upper + lower);
        m.t[static_cast<std::size_t>(y)] = (upper - lower) * unit(e[2], e[3]);
    }
    return m;
}

struct PenaltyProblem {
    double q;
    double mu;
};

double penalty_objective(const gsl_vector* v, void* params) {
    const auto* problem = static_cast<const PenaltyProblem*>(params);
    const QubitModel m = model_from(gsl_vector_const_ptr(v, 0));
    const double residual = std::abs(m.witness()) - problem->q;
    return -m.guessing() + problem->mu * residual * residual;
}

// One Nelder-Mead run from `x`; updates `x` in place.
void nelder_mead(std::array<double, kQubitParameterCount>& x, PenaltyProblem& problem, double step, int max_iterations) {
    gsl_multimin_function f{&penalty_objective, kQubitParameterCount, &problem};
    gsl_vector* start = gsl_vector_alloc(kQubitParameterCount);
    gsl_vector* steps = gsl_vector_alloc(kQubitParameterCount);
    for (int i = 0; i < kQubitParameterCount; ++i) gsl_vector_set(start, static_cast<std::size_t>(i), x[static_cast<std::size_t>(i)]);
    gsl_vector_set_all(steps, step);

    gsl_multimin_fminimizer* solver = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, kQubitParameterCount);
    gsl_multimin_fminimizer_set(solver, &f, start, steps);
    for (int it = 0; it < max_iterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(solver) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver), 1e-11) == GSL_SUCCESS) break;
    }
    for (int i = 0; i < kQubitParameterCount; ++i) x[static_cast<std::size_t>(i)] = gsl_vector_get(solver->x, static_cast<std::size_t>(i));

    gsl_multimin_fminimizer_free(solver);
    gsl_vector_free(steps);
    gsl_vector_free(start);
}

// Penalty weights. Near |W_2| = 1 the attainable p_bar grows like the square
// root of the constraint slack, so the last two weights are needed to pull
// the residual well under kConstraintResidualTol.
constexpr std::array<double, 6> kPenaltySchedule{1e1, 1e2, 1e3, 1e4, 1e5, 1e6};

detail::RunOutcome guessing_run(double q, const OptimizerConfig& cfg, int restart) {
    auto rng = restart_rng(cfg.seed, static_cast<std::uint64_t>(restart));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::array<double, kQubitParameterCount> x{};
    for (auto& v : x) v = angle(rng);

    PenaltyProblem problem{q, 0.0};
    int iterations = 0;
    const auto round = [&](double mu) {
        problem.mu = mu;
        nelder_mead(x, problem, 0.5, cfg.max_iterations);
        nelder_mead(x, problem, 0.05, cfg.max_iterations);
        iterations += 2;
    };
    for (double mu : kPenaltySchedule) round(mu);

    const QubitModel m = model_from(x.data());
    detail::RunOutcome out;
    out.value = m.guessing();
    out.feasible = std::abs(std::abs(m.witness()) - q) <= kConstraintResidualTol;
    out.converged = out.feasible;
    out.iterations = iterations;
    out.strategy = qubit_strategy_from_parameters(x);
    return out;
}

OptimizationResult guessing_driver(double q, const OptimizerConfig& cfg, bool parallel) {
    cfg.validate();
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("target witness value Q must lie in (0, 1]");
    const auto outcomes = detail::run_restarts(cfg.restarts, cfg.threads, parallel,
                                               [&](int r) { return guessing_run(q, cfg, r); });
    OptimizationResult result;
    if (!detail::merge_outcomes(outcomes, result)) {
        throw OptimizationFailure("no restart met |W_2| = " + std::to_string(q) + " within the residual tolerance");
    }
    return result;
}

}  // namespace

QuantumStrategy qubit_strategy_from_parameters(std::span<const double> params) {
    if (params.size() != static_cast<std::size_t>(kQubitParameterCount)) {
        throw std::invalid_argument("qubit parametrization needs 16 values");
    }
    const QubitModel m = model_from(params.data());
    const auto basis = gellmann_basis(2);
    QuantumStrategy q;
    q.dim = 2;
    for (const auto& s : m.s) q.states.push_back(bloch_to_state(s, basis));
    for (int y = 0; y < 2; ++y) {
        q.effects.push_back(m.c[static_cast<std::size_t>(y)] * HermitianMatrix::Identity(2, 2) +
                            0.5 * basis.combine(m.t[static_cast<std::size_t>(y)]));
    }
    return q;
}

OptimizationResult maximize_guessing_probability(double q, const OptimizerConfig& cfg) {
    return guessing_driver(q, cfg, true);
}

namespace reference {

OptimizationResult maximize_guessing_probability_serial(double q, const OptimizerConfig& cfg) {
    return guessing_driver(q, cfg, false);
}

}  // namespace reference

}  // namespace dimwit
