#pragma once

// Restart driver shared by the optimizers: runs independent restarts either
// under OpenMP or serially and merges them by maximum value.

#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

#include "dimwit/optimize.hpp"

namespace dimwit::detail {

struct RunOutcome {
    double value = -std::numeric_limits<double>::infinity();
    AnyStrategy strategy;
    int iterations = 0;
    bool converged = false;
    bool feasible = true;
};

template <typename Run>
std::vector<RunOutcome> run_restarts(int restarts, int threads, bool parallel, const Run& run) {
    std::vector<RunOutcome> outcomes(static_cast<std::size_t>(restarts));
    if (!parallel) {
        for (int r = 0; r < restarts; ++r) outcomes[static_cast<std::size_t>(r)] = run(r);
        return outcomes;
    }
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int r = 0; r < restarts; ++r) {
        try {
            outcomes[static_cast<std::size_t>(r)] = run(r);
        } catch (...) {
#pragma omp critical(dimwit_restart_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return outcomes;
}

// Best feasible outcome, lowest restart index on ties. Returns false when no
// restart was feasible.
inline bool merge_outcomes(const std::vector<RunOutcome>& outcomes, OptimizationResult& result) {
    int best = -1;
    result.restart_values.clear();
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        const auto& o = outcomes[r];
        result.restart_values.push_back(o.feasible ? o.value : std::numeric_limits<double>::quiet_NaN());
        if (o.feasible && (best < 0 || o.value > outcomes[static_cast<std::size_t>(best)].value)) {
            best = static_cast<int>(r);
        }
    }
    if (best < 0) return false;
    const auto& o = outcomes[static_cast<std::size_t>(best)];
    result.best_value = o.value;
    result.best_strategy = o.strategy;
    result.iterations_used = o.iterations;
    result.converged = o.converged;
    return true;
}

}  // namespace dimwit::detail
