#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "dimwit/analysis.hpp"
#include "dimwit/constructions.hpp"
#include "dimwit/witness.hpp"

using namespace dimwit;
using Catch::Approx;

TEST_CASE("guessing_probability", "[analysis]") {
    RealMatrix det(2, 2);
    det << 1, 0, 0, 1;
    REQUIRE(guessing_probability(Behavior(det)) == 1.0);
    REQUIRE(guessing_probability(Behavior(RealMatrix::Constant(4, 2, 0.5))) == 0.5);

    // +-z states against (z +- x)/sqrt 2 effects: every entry is (1 +- 1/sqrt 2)/2.
    const double expected = std::pow(std::cos(std::numbers::pi / 8), 2);
    REQUIRE(guessing_probability(behavior_from_quantum(bb84_strategy(std::numbers::pi / 4))) ==
            Approx(expected).margin(1e-12));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        ClassicalStrategy c{3, RealMatrix::Zero(3, 4), RealMatrix::Zero(3, 2)};
        for (int x = 0; x < 4; ++x) c.s(static_cast<Eigen::Index>(rng() % 3), x) = 1.0;
        for (auto& v : c.t0.reshaped()) v = static_cast<double>(rng() % 2);
        REQUIRE(guessing_probability(behavior_from_classical(c)) == 1.0);
    }
    REQUIRE_THROWS_AS(guessing_probability(Behavior(RealMatrix::Constant(1, 2, 0.5))), ShapeError);
}

TEST_CASE("min_entropy", "[analysis]") {
    REQUIRE(min_entropy(1.0) == 0.0);
    REQUIRE(min_entropy(0.5) == 1.0);
    REQUIRE(min_entropy(std::pow(std::cos(std::numbers::pi / 8), 2)) == Approx(0.228447).margin(1e-6));
    REQUIRE_THROWS_AS(min_entropy(0.4), std::invalid_argument);
    REQUIRE_THROWS_AS(min_entropy(1.1), std::invalid_argument);
}

TEST_CASE("monotonize", "[analysis]") {
    const std::vector<RandomnessPoint> raw{{0.1, 0.97, 0}, {0.5, 0.98, 0}, {0.9, 0.92, 0}, {1.0, 0.85, 0}};
    const auto mono = monotonize(raw);
    REQUIRE(mono[0].p_bar == 0.98);
    REQUIRE(mono[1].p_bar == 0.98);
    REQUIRE(mono[2].p_bar == 0.92);
    REQUIRE(mono[3].p_bar == 0.85);
    for (std::size_t i = 0; i < mono.size(); ++i) {
        REQUIRE(mono[i].h_min == Approx(-std::log2(mono[i].p_bar)).margin(1e-12));
        if (i > 0) REQUIRE(mono[i].h_min >= mono[i - 1].h_min);
    }
}

TEST_CASE("randomness_curve", "[analysis][slow]") {
    OptimizerConfig cfg;
    cfg.restarts = 40;
    cfg.max_iterations = 3000;
    cfg.seed = 5;
    const auto curve = randomness_curve({0.1, 0.5, 1.0}, cfg);
    REQUIRE(curve.complete());
    REQUIRE(curve.points.size() == 3);
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        REQUIRE(curve.points[i].h_min > 0.0);
        if (i > 0) REQUIRE(curve.points[i].h_min >= curve.points[i - 1].h_min);
    }
    REQUIRE(curve.points[2].h_min == Approx(0.228447).margin(0.01));

    const auto near_zero = randomness_curve({1e-6}, cfg);
    REQUIRE(near_zero.points.at(0).h_min <= 0.01);

    REQUIRE_THROWS_AS(randomness_curve({0.5, 0.1}, cfg), std::invalid_argument);
    REQUIRE_THROWS_AS(randomness_curve({0.0}, cfg), std::invalid_argument);
}

TEST_CASE("find_bit_decomposition", "[analysis]") {
    SECTION("random bit strategies round trip") {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 2000; ++trial) {
            const int nx = 2 + static_cast<int>(rng() % 5);
            const int ny = 1 + static_cast<int>(rng() % 4);
            const auto b = behavior_from_classical(random_classical_strategy(2, nx, ny, rng));
            const auto r = find_bit_decomposition(b);
            REQUIRE(r.found);
            REQUIRE(r.residual <= 1e-8);
            REQUIRE_NOTHROW(r.strategy->validate());
            REQUIRE((behavior_from_classical(*r.strategy).p0() - b.p0()).cwiseAbs().maxCoeff() <= r.residual + 1e-15);
        }
    }
    SECTION("deterministic bit strategies") {
        ClassicalStrategy c{2, RealMatrix::Zero(2, 4), RealMatrix::Zero(2, 2)};
        for (int x = 0; x < 4; ++x) c.s(x % 2, x) = 1.0;
        c.t0 << 1, 0, 0, 1;
        const auto r = find_bit_decomposition(behavior_from_classical(c));
        REQUIRE(r.found);
        REQUIRE(r.residual <= 1e-12);
    }
    SECTION("BB84 and the correlated mixture do not decompose") {
        REQUIRE_FALSE(find_bit_decomposition(behavior_from_quantum(bb84_strategy(0.0))).found);
        REQUIRE_FALSE(find_bit_decomposition(correlated_mixture_behavior()).found);
    }
    SECTION("preparation-independent behavior") {
        RealMatrix p(4, 3);
        p.rowwise() = Eigen::RowVector3d(0.2, 0.7, 1.0);
        const auto r = find_bit_decomposition(Behavior(p));
        REQUIRE(r.found);
        REQUIRE(r.residual <= 1e-15);
        REQUIRE(r.strategy->t0.row(0) == r.strategy->t0.row(1));
    }
    SECTION("rank-one but noisy beyond tolerance") {
        std::mt19937_64 rng(73);
        const auto b = behavior_from_classical(random_classical_strategy(2, 4, 2, rng));
        RealMatrix p = b.p0();
        p(3, 1) = std::clamp(p(3, 1) + 1e-3, 0.0, 1.0);
        REQUIRE_FALSE(find_bit_decomposition(Behavior(p)).found);
    }
    SECTION("agrees with the relabeling scan on qubit behaviors") {
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 500; ++trial) {
            const auto b = behavior_from_quantum(random_quantum_strategy(2, 4, 2, rng));
            const bool null = *witness_relabeling_scan(b).relabeling_max <= kDecompositionTol;
            REQUIRE(find_bit_decomposition(b).found == null);
        }
    }
}
