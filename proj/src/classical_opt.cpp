#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

#include "dimwit/optimize.hpp"
#include "dimwit/witness.hpp"
#include "restarts.hpp"

namespace dimwit {

bool brute_force_feasible(int d, int k) {
    const double count = std::pow(static_cast<double>(d), 2.0 * k) * std::pow(2.0, static_cast<double>(d) * k);
    return d >= 1 && k >= 1 && count <= kBruteForceLimit;
}

namespace {

void check_bruteforce(int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("brute force needs d >= 1 and k >= 1");
    if (!brute_force_feasible(d, k)) {
        throw std::domain_error("brute force over d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                                " exceeds the enumeration limit");
    }
}

std::vector<int> decode_messages(long long index, int d, int preparations) {
    std::vector<int> messages(static_cast<std::size_t>(preparations));
    for (int x = 0; x < preparations; ++x) {
        messages[static_cast<std::size_t>(x)] = static_cast<int>(index % d);
        index /= d;
    }
    return messages;
}

struct Candidate {
    double value = -1.0;
    long long index = std::numeric_limits<long long>::max();
    std::vector<int> masks;  // response bitmask per measurement
};

bool better(const Candidate& a, const Candidate& b) {
    return a.value > b.value || (a.value == b.value && a.index < b.index);
}

// For a fixed message assignment, a measurement's response bitmask t yields
// the witness row (t[m(2j)] - t[m(2j+1)])_j. The rows available to every
// measurement are the same set, and |det| ignores row order, so it suffices to
// search k-subsets of the distinct nonzero rows.
Candidate best_for_assignment(const std::vector<int>& messages, int d, int k) {
    std::vector<std::vector<int>> rows;
    std::vector<int> row_mask;
    for (int t = 0; t < (1 << d); ++t) {
        std::vector<int> row(static_cast<std::size_t>(k));
        bool nonzero = false;
        for (int j = 0; j < k; ++j) {
            const int hi = (t >> messages[static_cast<std::size_t>(2 * j)]) & 1;
            const int lo = (t >> messages[static_cast<std::size_t>(2 * j + 1)]) & 1;
            row[static_cast<std::size_t>(j)] = hi - lo;
            nonzero = nonzero || hi != lo;
        }
        if (!nonzero || std::find(rows.begin(), rows.end(), row) != rows.end()) continue;
        rows.push_back(std::move(row));
        row_mask.push_back(t);
    }

    Candidate best;
    best.value = 0.0;
    best.masks.assign(static_cast<std::size_t>(k), 0);
    const int n = static_cast<int>(rows.size());
    if (n < k) return best;

    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    RealMatrix w(k, k);
    while (true) {
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                w(i, j) = rows[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])][static_cast<std::size_t>(j)];
            }
        }
        const double value = std::abs(determinant(w));
        if (value > best.value) {
            best.value = value;
            for (int i = 0; i < k; ++i) {
                best.masks[static_cast<std::size_t>(i)] = row_mask[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
            }
        }
        int pos = k - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
    return best;
}

ClassicalStrategy deterministic_strategy(const std::vector<int>& messages, const std::vector<int>& masks, int d) {
    ClassicalStrategy c;
    c.dim = d;
    c.s = RealMatrix::Zero(d, static_cast<Eigen::Index>(messages.size()));
    c.t0 = RealMatrix::Zero(d, static_cast<Eigen::Index>(masks.size()));
    for (std::size_t x = 0; x < messages.size(); ++x) c.s(messages[x], static_cast<Eigen::Index>(x)) = 1.0;
    for (std::size_t y = 0; y < masks.size(); ++y) {
        for (int m = 0; m < d; ++m) c.t0(m, static_cast<Eigen::Index>(y)) = (masks[y] >> m) & 1;
    }
    return c;
}

}  // namespace

OptimizationResult maximize_witness_classical_bruteforce(int d, int k, const OptimizerConfig& cfg) {
    check_bruteforce(d, k);
    long long assignments = 1;
    for (int x = 0; x < 2 * k; ++x) assignments *= d;

    Candidate best;
    const int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
    {
        Candidate local;
#pragma omp for schedule(static)
        for (long long idx = 0; idx < assignments; ++idx) {
            Candidate c = best_for_assignment(decode_messages(idx, d, 2 * k), d, k);
            c.index = idx;
            if (better(c, local)) local = std::move(c);
        }
#pragma omp critical(dimwit_bruteforce_merge)
        if (better(local, best)) best = std::move(local);
    }

    OptimizationResult result;
    result.best_value = best.value;
    result.best_strategy = deterministic_strategy(decode_messages(best.index, d, 2 * k), best.masks, d);
    result.iterations_used = static_cast<int>(std::min<long long>(assignments, std::numeric_limits<int>::max()));
    result.converged = true;
    result.restart_values = {best.value};
    return result;
}

namespace reference {

OptimizationResult maximize_witness_classical_bruteforce_serial(int d, int k) {
    check_bruteforce(d, k);
    long long assignments = 1;
    for (int x = 0; x < 2 * k; ++x) assignments *= d;
    const long long responses = 1LL << (d * k);

    OptimizationResult result;
    result.best_value = -1.0;
    for (long long idx = 0; idx < assignments; ++idx) {
        const auto messages = decode_messages(idx, d, 2 * k);
        for (long long t = 0; t < responses; ++t) {
            std::vector<int> masks(static_cast<std::size_t>(k));
            for (int y = 0; y < k; ++y) masks[static_cast<std::size_t>(y)] = static_cast<int>((t >> (y * d)) & ((1 << d) - 1));
            ClassicalStrategy c = deterministic_strategy(messages, masks, d);
            const double value = witness_value(behavior_from_classical(c), k).value;
            if (value > result.best_value) {
                result.best_value = value;
                result.best_strategy = std::move(c);
            }
        }
    }
    result.iterations_used = static_cast<int>(std::min<long long>(assignments * responses, std::numeric_limits<int>::max()));
    result.converged = true;
    result.restart_values = {result.best_value};
    return result;
}

}  // namespace reference

double seesaw_classical_polish(ClassicalStrategy& c, int k, const OptimizerConfig& cfg, int* iterations, bool* converged,
                               SeesawTrace* trace) {
    if (c.num_preparations() != 2 * k || c.num_measurements() != k) {
        throw ShapeError("classical see-saw needs 2k preparations and k measurements");
    }
    const int d = c.dim;
    const auto witness = [&] {
        RealMatrix w(k, k);
        for (int j = 0; j < k; ++j) {
            const RealVector diff = c.s.col(2 * j) - c.s.col(2 * j + 1);
            for (int i = 0; i < k; ++i) w(i, j) = c.t0.col(i).dot(diff);
        }
        return w;
    };

    RealMatrix w = witness();
    double current = std::abs(determinant(w));
    if (trace) trace->values.push_back(current);

    const auto commit = [&](auto&& apply, auto&& undo) {
        apply();
        RealMatrix candidate = witness();
        const double value = std::abs(determinant(candidate));
        if (value >= current) {
            w = std::move(candidate);
            current = value;
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

        // det is affine in s(.|x): det = base + sign * sum_m s(m|x) g_m.
        for (int x = 0; x < 2 * k; ++x) {
            const int j = x / 2;
            const double sign = (x % 2 == 0) ? 1.0 : -1.0;
            const RealMatrix cof = cofactors(w);
            RealVector g = RealVector::Zero(d);
            for (int i = 0; i < k; ++i) g += cof(i, j) * c.t0.col(i);
            const double det = determinant(w);
            const double base = det - sign * c.s.col(x).dot(g);
            Eigen::Index arg_hi = 0;
            Eigen::Index arg_lo = 0;
            for (Eigen::Index m = 1; m < d; ++m) {
                if (sign * g(m) > sign * g(arg_hi)) arg_hi = m;
                if (sign * g(m) < sign * g(arg_lo)) arg_lo = m;
            }
            const double hi = base + sign * g(arg_hi);
            const double lo = base + sign * g(arg_lo);
            const Eigen::Index pick = std::abs(hi) >= std::abs(lo) ? arg_hi : arg_lo;
            const RealVector previous = c.s.col(x);
            commit(
                [&] {
                    c.s.col(x).setZero();
                    c.s(pick, x) = 1.0;
                },
                [&] { c.s.col(x) = previous; });
        }

        // det is linear in t(0|.,i): det = sum_m t0(m,i) h_m.
        for (int i = 0; i < k; ++i) {
            const RealMatrix cof = cofactors(w);
            RealVector h = RealVector::Zero(d);
            for (int j = 0; j < k; ++j) h += cof(i, j) * (c.s.col(2 * j) - c.s.col(2 * j + 1));
            const double gain = h.cwiseMax(0.0).sum();
            const double loss = -h.cwiseMin(0.0).sum();
            const RealVector previous = c.t0.col(i);
            commit(
                [&] {
                    for (Eigen::Index m = 0; m < d; ++m) {
                        c.t0(m, i) = (gain >= loss) ? (h(m) > 0.0 ? 1.0 : 0.0) : (h(m) < 0.0 ? 1.0 : 0.0);
                    }
                },
                [&] { c.t0.col(i) = previous; });
        }

        done = current - before < cfg.convergence_tol;
    }
    if (iterations) *iterations = it;
    if (converged) *converged = done;
    return current;
}

namespace {

OptimizationResult classical_driver(int d, int k, const OptimizerConfig& cfg, bool parallel) {
    cfg.validate();
    if (d < 1) throw std::invalid_argument("classical optimization needs d >= 1");
    if (k < 1) throw std::invalid_argument("witness order k must be positive");
    const auto outcomes = detail::run_restarts(cfg.restarts, cfg.threads, parallel, [&](int r) {
        auto rng = restart_rng(cfg.seed, static_cast<std::uint64_t>(r));
        ClassicalStrategy c = random_classical_strategy(d, 2 * k, k, rng);
        detail::RunOutcome out;
        out.value = seesaw_classical_polish(c, k, cfg, &out.iterations, &out.converged);
        out.strategy = std::move(c);
        return out;
    });
    OptimizationResult result;
    detail::merge_outcomes(outcomes, result);
    return result;
}

}  // namespace

OptimizationResult maximize_witness_classical_seesaw(int d, int k, const OptimizerConfig& cfg) {
    return classical_driver(d, k, cfg, true);
}

namespace reference {

OptimizationResult maximize_witness_classical_seesaw_serial(int d, int k, const OptimizerConfig& cfg) {
    return classical_driver(d, k, cfg, false);
}

}  // namespace reference

}  // namespace dimwit
