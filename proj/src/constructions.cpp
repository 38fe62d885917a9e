#include "dimwit/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dimwit {

namespace {

HermitianMatrix qubit_operator(double c, const Eigen::Vector3d& v) {
    const auto basis = gellmann_basis(2);
    // Gell-Mann ordering for d=2 is (sigma_x, sigma_y, sigma_z).
    return c * HermitianMatrix::Identity(2, 2) + 0.5 * basis.combine(v);
}

HermitianMatrix projector(const Eigen::VectorXcd& v) {
    return v * v.adjoint();
}

}  // namespace

QuantumStrategy bb84_strategy(double theta) {
    const Eigen::Vector3d x_hat(1.0, 0.0, 0.0);
    const Eigen::Vector3d z_hat(0.0, 0.0, 1.0);
    QuantumStrategy q;
    q.dim = 2;
    for (const Eigen::Vector3d& s : {Eigen::Vector3d(z_hat), Eigen::Vector3d(-z_hat), Eigen::Vector3d(x_hat),
                                     Eigen::Vector3d(-x_hat)}) {
        q.states.push_back(qubit_operator(0.5, s));
    }
    const Eigen::Vector3d t0 = std::cos(theta) * z_hat + std::sin(theta) * x_hat;
    const Eigen::Vector3d t1 = std::sin(theta) * z_hat - std::cos(theta) * x_hat;
    q.effects.push_back(qubit_operator(0.5, t0));
    q.effects.push_back(qubit_operator(0.5, t1));
    return q;
}

ClassicalStrategy classical_identity_strategy(int k) {
    if (k < 1) throw std::invalid_argument("classical identity strategy needs k >= 1");
    ClassicalStrategy c;
    c.dim = k + 1;
    c.s = RealMatrix::Zero(k + 1, 2 * k);
    c.t0 = RealMatrix::Zero(k + 1, k);
    for (int x = 0; x < 2 * k; ++x) c.s(x % 2 == 0 ? x / 2 : k, x) = 1.0;
    for (int y = 0; y < k; ++y) c.t0(y, y) = 1.0;
    return c;
}

Behavior correlated_mixture_behavior() {
    // Messages are read as the output bit: (i) b = m + y mod 2 with m = 0 iff
    // x in {0,3}; (ii) b = m with m = 0 iff x in {0,2}.
    RealMatrix p0(4, 2);
    for (int x = 0; x < 4; ++x) {
        const int m1 = (x == 0 || x == 3) ? 0 : 1;
        const int m2 = (x == 0 || x == 2) ? 0 : 1;
        for (int y = 0; y < 2; ++y) {
            const double first = ((m1 + y) % 2 == 0) ? 1.0 : 0.0;
            const double second = (m2 == 0) ? 1.0 : 0.0;
            p0(x, y) = 0.5 * (first + second);
        }
    }
    return Behavior(std::move(p0));
}

QuantumStrategy parallel_gellmann_strategy(int d, int k) {
    if (d < 2) throw std::invalid_argument("Gell-Mann strategy needs d >= 2");
    if (k < 1 || k > d * d - 1) {
        throw std::invalid_argument("Gell-Mann strategy needs 1 <= k <= d^2-1 = " + std::to_string(d * d - 1));
    }
    const auto basis = gellmann_basis(d);
    const auto n = static_cast<Eigen::Index>(basis.size());

    QuantumStrategy q;
    q.dim = d;
    // 1/(d-1) is the radius of the largest ball inside the state space; 2/d overshoots for d > 2.
    const double radius = 1.0 / (d - 1);
    for (int j = 0; j < k; ++j) {
        const RealVector e = RealVector::Unit(n, j);
        q.states.push_back(bloch_to_state(radius * e, basis));
        q.states.push_back(bloch_to_state(-radius * e, basis));
    }
    for (int i = 0; i < k; ++i) {
        // Longest T along e_i whose traceless part spans at most 1, so some c fits 0 <= M <= I.
        const auto unit = hermitian_eigen(vector_to_effect(0.0, RealVector::Unit(n, i), basis));
        const double spread = unit.values(unit.values.size() - 1) - unit.values(0);
        const RealVector t = std::min(1.0, 1.0 / spread) * RealVector::Unit(n, i);
        const auto eig = hermitian_eigen(vector_to_effect(0.0, t, basis));
        const double c = 0.5 * (1.0 - eig.values(0) - eig.values(eig.values.size() - 1));
        q.effects.push_back(vector_to_effect(c, t, basis));
    }
    return q;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

std::vector<Basis> mub_bases(int d) {
    if (!is_prime(d)) throw std::invalid_argument("MUB construction needs a prime dimension, got " + std::to_string(d));
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Basis> bases;
    bases.push_back(Basis::Identity(d, d));

    if (d == 2) {
        // Eigenbases of sigma_x and sigma_y.
        for (const Complex phase : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
            Basis b(2, 2);
            b << norm, norm, norm * phase, -norm * phase;
            bases.push_back(b);
        }
        return bases;
    }

    // Odd prime: |e_r^b> = d^{-1/2} sum_j w^{b j^2 + r j} |j>.
    for (int b = 0; b < d; ++b) {
        Basis basis(d, d);
        for (int r = 0; r < d; ++r) {
            for (int j = 0; j < d; ++j) {
                const long long exponent = (static_cast<long long>(b) * j * j + static_cast<long long>(r) * j) % d;
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent) / d;
                basis(j, r) = norm * Complex(std::cos(angle), std::sin(angle));
            }
        }
        bases.push_back(basis);
    }
    return bases;
}

QuantumStrategy mub_strategy(int d, int k) {
    if (!is_prime(d)) throw std::invalid_argument("MUB strategy needs a prime dimension, got " + std::to_string(d));
    if (k < 1 || k > d * d - 1) {
        throw std::invalid_argument("MUB strategy needs 1 <= k <= d^2-1 = " + std::to_string(d * d - 1));
    }
    const auto bases = mub_bases(d);
    QuantumStrategy q;
    q.dim = d;
    for (int j = 0; j < k; ++j) {
        const auto& basis = bases[static_cast<std::size_t>(j / (d - 1))];
        const int r = j % (d - 1);
        q.states.push_back(projector(basis.col(r)));
        q.states.push_back(projector(basis.col(r + 1)));
    }
    for (int i = 0; i < k; ++i) {
        const auto& basis = bases[static_cast<std::size_t>(i / (d - 1))];
        q.effects.push_back(projector(basis.col(i % (d - 1))));
    }
    return q;
}

ClassicalStrategy classical_hadamard_strategy() {
    ClassicalStrategy c;
    c.dim = 4;
    c.s = RealMatrix::Identity(4, 4);
    c.t0.resize(4, 2);
    c.t0 << 1, 1,
            0, 0,
            1, 0,
            0, 1;
    return c;
}

}  // namespace dimwit
