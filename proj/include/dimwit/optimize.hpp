#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "dimwit/scenario.hpp"

namespace dimwit {

struct OptimizerConfig {
    int restarts = 20;
    int max_iterations = 500;
    double convergence_tol = 1e-12;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: OpenMP default

    void validate() const;
};

using AnyStrategy = std::variant<QuantumStrategy, ClassicalStrategy>;

struct OptimizationResult {
    double best_value = 0.0;
    AnyStrategy best_strategy;
    int iterations_used = 0;
    bool converged = false;
    std::vector<double> restart_values;
};

// Independent generator for restart `index`, derived from the master seed so
// that serial and parallel schedules draw identical streams.
std::mt19937_64 restart_rng(std::uint64_t master_seed, std::uint64_t index);

// Haar-random pure state on C^d.
Eigen::VectorXcd random_pure_state(int d, std::mt19937_64& rng);
// c ~ U[0.25, 0.75] and a Gell-Mann vector drawn uniformly from a ball small
// enough that 0 <= M <= I.
HermitianMatrix random_effect(const GellMannBasis& basis, std::mt19937_64& rng);
QuantumStrategy random_quantum_strategy(int d, int preparations, int measurements, std::mt19937_64& rng);
ClassicalStrategy random_classical_strategy(int d, int preparations, int measurements, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// See-saw over quantum strategies. det W_k is linear in each effect (one row)
// and in each pair of states (one column), so every block update is an exact
// maximization of |det| by eigendecomposition.

struct SeesawTrace {
    std::vector<double> values;  // |det| after every block update
};

// Polishes a given strategy in place; returns the final |det|.
double seesaw_quantum_polish(QuantumStrategy& strategy, int k, const OptimizerConfig& cfg, int* iterations = nullptr,
                             bool* converged = nullptr, SeesawTrace* trace = nullptr);

// Closed-form effect that maximizes |Tr(M A)| over 0 <= M <= I.
HermitianMatrix best_effect(const HermitianMatrix& a);

OptimizationResult maximize_witness_quantum(int d, int k, const OptimizerConfig& cfg);

// ---------------------------------------------------------------------------
// Classical strategies.

// Upper limit on d^(2k) * 2^(d k) for exhaustive enumeration.
inline constexpr double kBruteForceLimit = 1e8;

bool brute_force_feasible(int d, int k);

// Throws std::domain_error when the instance exceeds the enumeration guard.
OptimizationResult maximize_witness_classical_bruteforce(int d, int k, const OptimizerConfig& cfg = {});

double seesaw_classical_polish(ClassicalStrategy& strategy, int k, const OptimizerConfig& cfg, int* iterations = nullptr,
                               bool* converged = nullptr, SeesawTrace* trace = nullptr);

OptimizationResult maximize_witness_classical_seesaw(int d, int k, const OptimizerConfig& cfg);

// ---------------------------------------------------------------------------
// Guessing probability at fixed |W_2| = Q over qubit strategies.

inline constexpr double kConstraintResidualTol = 1e-4;

class OptimizationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Smooth unbounded coordinates for a qubit strategy with pure preparations:
// 2 angles per state, then per effect 2 eigenvalue angles and 2 direction
// angles.
inline constexpr int kQubitParameterCount = 16;
QuantumStrategy qubit_strategy_from_parameters(std::span<const double> params);

OptimizationResult maximize_guessing_probability(double q, const OptimizerConfig& cfg);

// ---------------------------------------------------------------------------
// Serial reference implementations. Same results as the OpenMP kernels above,
// kept for tests and benchmarks.
namespace reference {

OptimizationResult maximize_witness_quantum_serial(int d, int k, const OptimizerConfig& cfg);
OptimizationResult maximize_witness_classical_seesaw_serial(int d, int k, const OptimizerConfig& cfg);
// Naive enumeration of every deterministic strategy, evaluated through the
// behavior and witness pipeline.
OptimizationResult maximize_witness_classical_bruteforce_serial(int d, int k);
OptimizationResult maximize_guessing_probability_serial(double q, const OptimizerConfig& cfg);

}  // namespace reference

}  // namespace dimwit
