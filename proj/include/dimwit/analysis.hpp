#pragma once

#include <optional>
#include <vector>

#include "dimwit/optimize.hpp"
#include "dimwit/scenario.hpp"

namespace dimwit {

struct RandomnessPoint {
    double q = 0.0;
    double p_bar = 1.0;
    double h_min = 0.0;  // bits
};

// Average guessing probability of b over x, y in {0, 1}.
double guessing_probability(const Behavior& behavior);

// -log2(p_bar) for p_bar in [1/2, 1].
double min_entropy(double p_bar);

struct RandomnessCurve {
    std::vector<RandomnessPoint> points;  // p_bar made nonincreasing in Q
    std::vector<RandomnessPoint> raw;     // per-point optimizer output
    std::vector<std::size_t> failed;      // grid indices whose optimization failed

    bool complete() const { return failed.empty(); }
};

// Grid must be ascending and inside (0, 1]. Failed points are dropped from
// `points` and `raw` and listed in `failed`.
RandomnessCurve randomness_curve(const std::vector<double>& q_grid, const OptimizerConfig& cfg);

// Enforces p_bar nonincreasing in Q: a strategy with |W_2| >= Q' >= Q also
// satisfies |W_2| >= Q, so the relaxed maximum at Q bounds every later one.
std::vector<RandomnessPoint> monotonize(std::vector<RandomnessPoint> raw);

inline constexpr double kDecompositionTol = 1e-7;

struct DecompositionResult {
    bool found = false;
    std::optional<ClassicalStrategy> strategy;  // d = 2
    double residual = 0.0;                      // max |p0 - reconstruction|
    double second_singular_value = 0.0;
};

// Searches for independent-device bit strategies reproducing `behavior`.
// Never throws on well-formed input; found = false otherwise.
DecompositionResult find_bit_decomposition(const Behavior& behavior, double tol = kDecompositionTol);

}  // namespace dimwit
