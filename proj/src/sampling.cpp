#include <cmath>

#include "dimwit/optimize.hpp"

namespace dimwit {

void OptimizerConfig::validate() const {
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
    if (!(convergence_tol > 0.0)) throw std::invalid_argument("convergence_tol must be positive");
}

std::mt19937_64 restart_rng(std::uint64_t master_seed, std::uint64_t index) {
    // splitmix64 finalizer over (seed, index)
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    std::seed_seq seq{static_cast<std::uint32_t>(z), static_cast<std::uint32_t>(z >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

Eigen::VectorXcd random_pure_state(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

HermitianMatrix random_effect(const GellMannBasis& basis, std::mt19937_64& rng) {
    const int d = basis.dim;
    const auto n = static_cast<Eigen::Index>(basis.size());
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> normal;

    const double c = 0.25 + 0.5 * uniform(rng);
    // |eig((phi_d/d) T.lambda)| <= |T| (d-1)/d
    const double radius = std::min(1.0, std::min(c, 1.0 - c) * d / (d - 1.0));
    RealVector t(n);
    for (Eigen::Index i = 0; i < n; ++i) t(i) = normal(rng);
    t *= radius * std::pow(uniform(rng), 1.0 / static_cast<double>(n)) / t.norm();
    return vector_to_effect(c, t, basis);
}

QuantumStrategy random_quantum_strategy(int d, int preparations, int measurements, std::mt19937_64& rng) {
    const auto basis = gellmann_basis(d);
    QuantumStrategy q;
    q.dim = d;
    for (int x = 0; x < preparations; ++x) {
        const auto psi = random_pure_state(d, rng);
        q.states.push_back(psi * psi.adjoint());
    }
    for (int y = 0; y < measurements; ++y) q.effects.push_back(random_effect(basis, rng));
    return q;
}

ClassicalStrategy random_classical_strategy(int d, int preparations, int measurements, std::mt19937_64& rng) {
    std::exponential_distribution<double> exponential(1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    ClassicalStrategy c;
    c.dim = d;
    c.s.resize(d, preparations);
    c.t0.resize(d, measurements);
    for (int x = 0; x < preparations; ++x) {
        for (int m = 0; m < d; ++m) c.s(m, x) = exponential(rng);
        c.s.col(x) /= c.s.col(x).sum();
    }
    for (int y = 0; y < measurements; ++y) {
        for (int m = 0; m < d; ++m) c.t0(m, y) = uniform(rng);
    }
    return c;
}

}  // namespace dimwit
