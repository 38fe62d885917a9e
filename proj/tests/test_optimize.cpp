#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dimwit/analysis.hpp"
#include "dimwit/constructions.hpp"
#include "dimwit/optimize.hpp"
#include "dimwit/witness.hpp"
#include "oracles.hpp"

using namespace dimwit;
using Catch::Approx;

namespace {

OptimizerConfig config(int restarts, std::uint64_t seed, int max_iterations = 500) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.max_iterations = max_iterations;
    return cfg;
}

double strategy_value(const OptimizationResult& r, int k) {
    return std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, QuantumStrategy>) return witness_value(behavior_from_quantum(s), k).value;
            else return witness_value(behavior_from_classical(s), k).value;
        },
        r.best_strategy);
}

}  // namespace

TEST_CASE("maximize_witness_quantum", "[optimize]") {
    SECTION("qubits reach 1") {
        const auto r = maximize_witness_quantum(2, 2, config(20, 1));
        REQUIRE(r.best_value == Approx(1.0).margin(1e-6));
        REQUIRE(strategy_value(r, 2) == Approx(r.best_value).margin(1e-8));
        REQUIRE(r.restart_values.size() == 20);
    }
    SECTION("qutrits reach 1.299") {
        const auto r = maximize_witness_quantum(3, 2, config(50, 2));
        REQUIRE(r.best_value == Approx(1.299).margin(0.005));
        REQUIRE_NOTHROW(std::get<QuantumStrategy>(r.best_strategy).validate());
    }
    SECTION("ququarts reach the algebraic maximum 2") {
        REQUIRE(maximize_witness_quantum(4, 2, config(20, 3)).best_value >= 2.0 - 1e-4);
    }
    SECTION("qubits cannot witness k = 4") {
        REQUIRE(maximize_witness_quantum(2, 4, config(10, 4)).best_value <= 1e-8);
    }
    SECTION("parallel and serial restarts agree bit for bit") {
        auto cfg = config(8, 99);
        const auto par = maximize_witness_quantum(3, 3, cfg);
        const auto ser = reference::maximize_witness_quantum_serial(3, 3, cfg);
        REQUIRE(par.restart_values == ser.restart_values);
        cfg.threads = 3;
        REQUIRE(maximize_witness_quantum(3, 3, cfg).restart_values == ser.restart_values);
        cfg.seed = 100;
        REQUIRE(maximize_witness_quantum(3, 3, cfg).restart_values != ser.restart_values);
    }
}

TEST_CASE("see-saw monotonicity", "[optimize]") {
    std::mt19937_64 rng(5);
    const auto cfg = config(1, 0, 50);
    for (auto [d, k] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 4}, std::pair{4, 3}}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto q = random_quantum_strategy(d, 2 * k, k, rng);
            SeesawTrace trace;
            seesaw_quantum_polish(q, k, cfg, nullptr, nullptr, &trace);
            for (std::size_t i = 1; i < trace.values.size(); ++i) REQUIRE(trace.values[i] >= trace.values[i - 1] - 1e-12);
            REQUIRE_NOTHROW(q.validate());
        }
        for (int trial = 0; trial < 5; ++trial) {
            auto c = random_classical_strategy(d + 1, 2 * k, k, rng);
            SeesawTrace trace;
            seesaw_classical_polish(c, k, cfg, nullptr, nullptr, &trace);
            for (std::size_t i = 1; i < trace.values.size(); ++i) REQUIRE(trace.values[i] >= trace.values[i - 1] - 1e-12);
            REQUIRE_NOTHROW(c.validate());
        }
    }
}

TEST_CASE("best_effect beats random valid effects", "[optimize]") {
    std::mt19937_64 rng(13);
    for (int d : {2, 3, 4}) {
        const auto basis = gellmann_basis(d);
        for (int trial = 0; trial < 10; ++trial) {
            Eigen::MatrixXcd g = Eigen::MatrixXcd::Random(d, d);
            const HermitianMatrix a = g + g.adjoint();
            const HermitianMatrix best = best_effect(a);
            REQUIRE(is_valid_effect(best));
            const double best_value = std::abs((best * a).trace().real());
            for (int n = 0; n < 1000; ++n) {
                const HermitianMatrix m = random_effect(basis, rng);
                REQUIRE(std::abs((m * a).trace().real()) <= best_value + 1e-12);
            }
        }
    }
}

TEST_CASE("maximize_witness_classical_bruteforce", "[optimize]") {
    REQUIRE(maximize_witness_classical_bruteforce(2, 2).best_value == 0.0);
    REQUIRE(maximize_witness_classical_bruteforce(3, 2).best_value == 1.0);
    const auto r4 = maximize_witness_classical_bruteforce(4, 2);
    REQUIRE(r4.best_value == 2.0);
    REQUIRE(strategy_value(r4, 2) == 2.0);
    REQUIRE(maximize_witness_classical_bruteforce(4, 3).best_value >= 1.0);

    SECTION("agrees with the naive serial enumeration and the table oracle") {
        for (int d = 1; d <= 4; ++d) {
            const double fast = maximize_witness_classical_bruteforce(d, 2).best_value;
            REQUIRE(fast == reference::maximize_witness_classical_bruteforce_serial(d, 2).best_value);
            REQUIRE(fast == oracle::classical_w2_max(d));
        }
        REQUIRE(maximize_witness_classical_bruteforce(3, 3).best_value ==
                reference::maximize_witness_classical_bruteforce_serial(3, 3).best_value);
    }
    SECTION("deterministic strategies dominate random mixed ones") {
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 2000; ++trial) {
            const auto b = behavior_from_classical(random_classical_strategy(3, 4, 2, rng));
            REQUIRE(witness_value(b, 2).value <= 1.0 + 1e-12);
        }
    }
    SECTION("enumeration guard") {
        REQUIRE_FALSE(brute_force_feasible(5, 3));
        REQUIRE_THROWS_AS(maximize_witness_classical_bruteforce(5, 3), std::domain_error);
    }
}

TEST_CASE("maximize_witness_classical_seesaw", "[optimize]") {
    REQUIRE(maximize_witness_classical_seesaw(3, 2, config(20, 1)).best_value == Approx(1.0).margin(1e-9));
    REQUIRE(maximize_witness_classical_seesaw(4, 3, config(20, 2)).best_value >= 1.0);
    REQUIRE(maximize_witness_classical_seesaw(2, 3, config(20, 3)).best_value <= 1e-9);
    for (int d = 1; d <= 3; ++d) {
        const auto seesaw = maximize_witness_classical_seesaw(d, 2, config(30, static_cast<std::uint64_t>(d)));
        REQUIRE(seesaw.best_value == Approx(maximize_witness_classical_bruteforce(d, 2).best_value).margin(1e-9));
        REQUIRE(strategy_value(seesaw, 2) == Approx(seesaw.best_value).margin(1e-8));
    }
    const auto cfg = config(6, 5);
    REQUIRE(maximize_witness_classical_seesaw(4, 3, cfg).restart_values ==
            reference::maximize_witness_classical_seesaw_serial(4, 3, cfg).restart_values);
}

TEST_CASE("maximize_guessing_probability", "[optimize][slow]") {
    const double oracle_q1 = oracle::guessing_grid_q1().p_bar;
    REQUIRE(oracle_q1 == Approx(0.853553391).margin(1e-9));

    const auto cfg = config(40, 7, 3000);
    const auto check = [](const OptimizationResult& r, double q) {
        const auto b = behavior_from_quantum(std::get<QuantumStrategy>(r.best_strategy));
        REQUIRE(std::abs(witness_value(b, 2).value - q) <= kConstraintResidualTol);
        REQUIRE(guessing_probability(b) == Approx(r.best_value).margin(1e-8));
    };

    const auto tiny = maximize_guessing_probability(1e-6, cfg);
    check(tiny, 1e-6);
    REQUIRE(tiny.best_value >= 1.0 - 1e-3);

    const auto full = maximize_guessing_probability(1.0, cfg);
    check(full, 1.0);
    REQUIRE(full.best_value == Approx(oracle_q1).margin(2e-3));

    const auto half = maximize_guessing_probability(0.5, cfg);
    check(half, 0.5);
    REQUIRE(half.best_value > oracle_q1);
    REQUIRE(half.best_value < 1.0);

    REQUIRE_THROWS_AS(maximize_guessing_probability(0.0, cfg), std::invalid_argument);
    REQUIRE_THROWS_AS(maximize_guessing_probability(1.5, cfg), std::invalid_argument);

    const auto small = config(4, 8, 500);
    REQUIRE(maximize_guessing_probability(0.7, small).restart_values ==
            reference::maximize_guessing_probability_serial(0.7, small).restart_values);
}

TEST_CASE("OptimizerConfig validation", "[optimize]") {
    auto cfg = config(0, 1);
    REQUIRE_THROWS_AS(maximize_witness_quantum(2, 2, cfg), std::invalid_argument);
    cfg = config(1, 1);
    cfg.convergence_tol = 0.0;
    REQUIRE_THROWS_AS(maximize_witness_classical_seesaw(2, 2, cfg), std::invalid_argument);
}
