#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dimwit/constructions.hpp"
#include "dimwit/optimize.hpp"
#include "dimwit/scenario.hpp"
#include "dimwit/witness.hpp"

using namespace dimwit;
using Catch::Approx;

namespace {

HermitianMatrix qubit(double c, double x, double y, double z) {
    HermitianMatrix m(2, 2);
    m << c + 0.5 * z, Complex(0.5 * x, -0.5 * y), Complex(0.5 * x, 0.5 * y), c - 0.5 * z;
    return m;
}

QuantumStrategy single(const HermitianMatrix& rho, const HermitianMatrix& effect) {
    return QuantumStrategy{2, {rho}, {effect}};
}

}  // namespace

TEST_CASE("Behavior", "[scenario]") {
    RealMatrix ok(2, 2);
    ok << 0, 1, 0.5, 0.25;
    REQUIRE_NOTHROW(Behavior(ok));
    RealMatrix bad = ok;
    bad(1, 1) = 1.5;
    REQUIRE_THROWS_AS(Behavior(bad), std::invalid_argument);
    bad(1, 1) = std::nan("");
    REQUIRE_THROWS_AS(Behavior(bad), std::invalid_argument);
}

TEST_CASE("behavior_from_quantum", "[scenario]") {
    const auto up = qubit(0.5, 0, 0, 1);
    const auto plus = qubit(0.5, 1, 0, 0);
    REQUIRE(behavior_from_quantum(single(up, up))(0, 0) == Approx(1.0));
    REQUIRE(behavior_from_quantum(single(plus, up))(0, 0) == Approx(0.5));

    SECTION("BB84 table at theta = 0") {
        // Hand evaluation of (1 + s.T)/2 with s = +-z, +-x and T_0 = z, T_1 = -x.
        const auto b = behavior_from_quantum(bb84_strategy(0.0));
        RealMatrix expected(4, 2);
        expected << 1, 0.5, 0, 0.5, 0.5, 0, 0.5, 1;
        REQUIRE((b.p0() - expected).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SECTION("rejects invalid strategies") {
        REQUIRE_THROWS_AS(behavior_from_quantum(single(qubit(0.5, 0, 0, 1.5), up)), std::invalid_argument);
        REQUIRE_THROWS_AS(behavior_from_quantum(single(up, qubit(0.8, 0, 0, 1))), std::invalid_argument);
        REQUIRE_THROWS_AS(behavior_from_quantum(single(qubit(0.6, 0, 0, 0), up)), std::invalid_argument);
    }
}

TEST_CASE("behavior_from_classical", "[scenario]") {
    SECTION("constant message, constant answer") {
        ClassicalStrategy c{2, RealMatrix::Zero(2, 3), RealMatrix::Zero(2, 2)};
        c.s.row(0).setOnes();
        c.t0.row(0).setOnes();
        REQUIRE(behavior_from_classical(c).p0().isApprox(RealMatrix::Ones(3, 2)));
    }
    SECTION("parity strategy") {
        ClassicalStrategy c{2, RealMatrix::Zero(2, 4), RealMatrix::Zero(2, 2)};
        for (int x = 0; x < 4; ++x) c.s(x % 2, x) = 1.0;
        c.t0.row(0).setOnes();  // t(0|m,y) = 1 - m
        const auto b = behavior_from_classical(c);
        for (int x = 0; x < 4; ++x) {
            for (int y = 0; y < 2; ++y) REQUIRE(b(x, y) == (x % 2 == 0 ? 1.0 : 0.0));
        }
    }
    SECTION("correlated-mixture component (i) is a valid bit strategy") {
        ClassicalStrategy c{2, RealMatrix::Zero(2, 4), RealMatrix::Zero(2, 2)};
        for (int x = 0; x < 4; ++x) c.s((x == 0 || x == 3) ? 0 : 1, x) = 1.0;
        for (int m = 0; m < 2; ++m) {
            for (int y = 0; y < 2; ++y) c.t0(m, y) = (m + y) % 2;
        }
        const auto b = behavior_from_classical(c);
        RealMatrix expected(4, 2);
        expected << 0, 1, 1, 0, 1, 0, 0, 1;
        REQUIRE(b.p0() == expected);
        REQUIRE(witness_value(b, 2).value == 0.0);
    }
    SECTION("bit identity p = s0 (t00 - t01) + t01 on random strategies") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            const auto c = random_classical_strategy(2, 4, 2, rng);
            const auto b = behavior_from_classical(c);
            for (int x = 0; x < 4; ++x) {
                for (int y = 0; y < 2; ++y) {
                    const double identity = c.s(0, x) * (c.t0(0, y) - c.t0(1, y)) + c.t0(1, y);
                    REQUIRE(b(x, y) == Approx(identity).margin(1e-15));
                }
            }
        }
    }
    SECTION("rejects invariant violations") {
        ClassicalStrategy c{2, RealMatrix::Constant(2, 2, 0.6), RealMatrix::Zero(2, 1)};
        REQUIRE_THROWS_AS(behavior_from_classical(c), std::invalid_argument);
        c.s.setConstant(0.5);
        c.t0(0, 0) = 1.2;
        REQUIRE_THROWS_AS(behavior_from_classical(c), std::invalid_argument);
    }
}

TEST_CASE("Bloch conversions", "[scenario]") {
    SECTION("qubit pole and maximally mixed state") {
        const auto basis2 = gellmann_basis(2);
        REQUIRE(bloch_to_state(RealVector::Unit(3, 2), basis2).isApprox(qubit(0.5, 0, 0, 1)));
        for (int d = 2; d <= 5; ++d) {
            const auto basis = gellmann_basis(d);
            const auto rho = bloch_to_state(RealVector::Zero(d * d - 1), basis);
            REQUIRE(rho.isApprox(HermitianMatrix::Identity(d, d) / d));
        }
    }
    SECTION("qutrit Bloch ball: radius 1/2 is always PSD, 2/3 is not") {
        const auto basis = gellmann_basis(3);
        std::mt19937_64 rng(29);
        std::normal_distribution<double> n;
        for (int trial = 0; trial < 500; ++trial) {
            RealVector v(8);
            for (auto& x : v) x = n(rng);
            const auto rho = bloch_to_state(0.5 * v.normalized(), basis);
            REQUIRE(min_eigenvalue(rho) >= -1e-12);
        }
        // Along +lambda_8 the spectrum is (1 + sqrt3 r (1,1,-2)/sqrt3)/3, negative past r = 1/2.
        const auto below = bloch_to_state(-(2.0 / 3.0) * RealVector::Unit(8, 7), basis);
        REQUIRE(min_eigenvalue(below) == Approx(1.0 / 9.0).margin(1e-12));
        const auto above = bloch_to_state((2.0 / 3.0) * RealVector::Unit(8, 7), basis);
        REQUIRE(min_eigenvalue(above) == Approx(-1.0 / 9.0).margin(1e-12));
        REQUIRE(above.trace().real() == Approx(1.0));
    }
    SECTION("state_to_bloch inverts bloch_to_state") {
        std::mt19937_64 rng(23);
        std::normal_distribution<double> n;
        for (int d = 2; d <= 5; ++d) {
            const auto basis = gellmann_basis(d);
            RealVector v(d * d - 1);
            for (auto& x : v) x = n(rng);
            v *= 0.9 / v.norm();
            REQUIRE((state_to_bloch(bloch_to_state(v, basis), basis) - v).norm() <= 1e-12);
        }
    }
    SECTION("effects") {
        const auto basis2 = gellmann_basis(2);
        REQUIRE(vector_to_effect(0.5, RealVector::Unit(3, 2), basis2).isApprox(qubit(0.5, 0, 0, 1)));
        REQUIRE(vector_to_effect(0.5, RealVector::Zero(3), basis2).isApprox(HermitianMatrix::Identity(2, 2) / 2.0));

        // |0><0| - I/3 = (phi_3/3) v.lambda: the diagonal Gell-Mann components
        // are Tr(P0 lambda)/2 = 1/2 and 1/(2 sqrt 3), scaled by 3/phi_3 = sqrt 3.
        const auto basis3 = gellmann_basis(3);
        RealVector v = RealVector::Zero(8);
        v(6) = std::sqrt(3.0) / 2.0;
        v(7) = 0.5;
        const auto m = vector_to_effect(1.0 / 3.0, v, basis3);
        const auto eig = hermitian_eigen(m);
        REQUIRE(eig.values(0) == Approx(0.0).margin(1e-12));
        REQUIRE(eig.values(1) == Approx(0.0).margin(1e-12));
        REQUIRE(eig.values(2) == Approx(1.0).margin(1e-12));
        REQUIRE(std::abs(m(0, 0) - 1.0) <= 1e-12);
    }
    SECTION("input validation") {
        const auto basis = gellmann_basis(2);
        REQUIRE_THROWS_AS(bloch_to_state(RealVector::Constant(3, 1.0), basis), std::invalid_argument);
        REQUIRE_THROWS_AS(vector_to_effect(1.5, RealVector::Zero(3), basis), std::invalid_argument);
        REQUIRE_THROWS_AS(vector_to_effect(0.5, RealVector::Constant(3, 1.0), basis), std::invalid_argument);
    }
}

TEST_CASE("apply_noise", "[scenario]") {
    const auto b = behavior_from_quantum(bb84_strategy(0.0));
    const std::vector<double> pn{0.3, 0.8};
    REQUIRE(apply_noise(b, 1.0, pn).p0() == b.p0());
    const auto flat = apply_noise(b, 0.0, pn);
    for (int x = 0; x < 4; ++x) {
        REQUIRE(flat(x, 0) == Approx(0.3));
        REQUIRE(flat(x, 1) == Approx(0.8));
    }
    REQUIRE(witness_value(apply_noise(b, 0.5, {0.5, 0.5}), 2).value == Approx(0.25).margin(1e-12));

    SECTION("noise scaling eta^k on random behaviors") {
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int k = 1; k <= 4; ++k) {
            for (int trial = 0; trial < 50; ++trial) {
                RealMatrix p(2 * k, k);
                for (auto& v : p.reshaped()) v = u(rng);
                const Behavior clean(p);
                std::vector<double> noise(static_cast<std::size_t>(k));
                for (auto& v : noise) v = u(rng);
                const double eta = u(rng);
                const double noisy = witness_value(apply_noise(clean, eta, noise), k).value;
                REQUIRE(noisy == Approx(std::pow(eta, k) * witness_value(clean, k).value).margin(1e-9));
            }
        }
    }
    SECTION("input validation") {
        REQUIRE_THROWS_AS(apply_noise(b, 1.5, pn), std::invalid_argument);
        REQUIRE_THROWS_AS(apply_noise(b, 0.5, {0.5, 1.5}), std::invalid_argument);
        REQUIRE_THROWS_AS(apply_noise(b, 0.5, {0.5}), ShapeError);
    }
}
