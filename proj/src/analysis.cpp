#include "dimwit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dimwit {

double guessing_probability(const Behavior& behavior) {
    if (behavior.num_preparations() < 2 || behavior.num_measurements() < 2) {
        throw ShapeError("guessing probability needs at least 2 preparations and 2 measurements");
    }
    double sum = 0.0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) sum += std::max(behavior(x, y), 1.0 - behavior(x, y));
    }
    return 0.25 * sum;
}

double min_entropy(double p_bar) {
    if (!(p_bar >= 0.5 && p_bar <= 1.0)) throw std::invalid_argument("guessing probability must lie in [1/2, 1]");
    return -std::log2(p_bar);
}

std::vector<RandomnessPoint> monotonize(std::vector<RandomnessPoint> raw) {
    double running = 0.0;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        running = std::max(running, it->p_bar);
        it->p_bar = running;
        it->h_min = min_entropy(running);
    }
    return raw;
}

RandomnessCurve randomness_curve(const std::vector<double>& q_grid, const OptimizerConfig& cfg) {
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (!(q_grid[i] > 0.0 && q_grid[i] <= 1.0)) throw std::invalid_argument("grid values must lie in (0, 1]");
        if (i > 0 && q_grid[i] < q_grid[i - 1]) throw std::invalid_argument("grid must be sorted ascending");
    }
    RandomnessCurve curve;
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        try {
            const auto result = maximize_guessing_probability(q_grid[i], cfg);
            curve.raw.push_back({q_grid[i], result.best_value, min_entropy(result.best_value)});
        } catch (const OptimizationFailure&) {
            curve.failed.push_back(i);
        }
    }
    curve.points = monotonize(curve.raw);
    return curve;
}

namespace {

// a.z <= b for z = (alpha, beta)
struct HalfPlane {
    double a0;
    double a1;
    double b;
};

// Maximizes alpha over a bounded polygon by enumerating pairwise vertices.
std::optional<Eigen::Vector2d> max_alpha_vertex(const std::vector<HalfPlane>& planes, double slack) {
    std::optional<Eigen::Vector2d> best;
    for (std::size_t p = 0; p < planes.size(); ++p) {
        for (std::size_t q = p + 1; q < planes.size(); ++q) {
            const auto& u = planes[p];
            const auto& v = planes[q];
            const double det = u.a0 * v.a1 - u.a1 * v.a0;
            if (std::abs(det) < 1e-14) continue;
            const Eigen::Vector2d z((u.b * v.a1 - u.a1 * v.b) / det, (u.a0 * v.b - u.b * v.a0) / det);
            const bool inside = std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
                return h.a0 * z(0) + h.a1 * z(1) <= h.b + slack;
            });
            if (inside && (!best || z(0) > (*best)(0))) best = z;
        }
    }
    return best;
}

double reconstruction_residual(const Behavior& behavior, const ClassicalStrategy& c) {
    const RealMatrix p = c.s.transpose() * c.t0;
    return (p - behavior.p0()).cwiseAbs().maxCoeff();
}

}  // namespace

DecompositionResult find_bit_decomposition(const Behavior& behavior, double tol) {
    const int nx = behavior.num_preparations();
    const int ny = behavior.num_measurements();
    const RealMatrix& p0 = behavior.p0();
    DecompositionResult result;

    RealMatrix diff = p0.rowwise() - p0.row(0);
    Eigen::JacobiSVD<RealMatrix> svd(diff, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    result.second_singular_value = sigma.size() > 1 ? sigma(1) : 0.0;

    ClassicalStrategy c;
    c.dim = 2;
    c.s.resize(2, nx);
    c.t0.resize(2, ny);

    if (sigma(0) <= tol) {
        // Preparation-independent: the message carries nothing.
        c.s.row(0).setOnes();
        c.s.row(1).setZero();
        const RealVector mean = p0.colwise().mean().transpose();
        c.t0.row(0) = mean.transpose();
        c.t0.row(1) = mean.transpose();
    } else {
        if (result.second_singular_value > tol) return result;

        // p(x,y) ~ p(0,y) + a_x b_y with s(0|x) = alpha a_x + beta. Multiplying
        // the response constraints by alpha > 0 makes every bound linear.
        const RealVector a = sigma(0) * svd.matrixU().col(0);
        const RealVector b = svd.matrixV().col(0);
        std::vector<HalfPlane> planes;
        planes.push_back({-1.0, 0.0, 0.0});
        for (int x = 0; x < nx; ++x) {
            planes.push_back({-a(x), -1.0, 0.0});
            planes.push_back({a(x), 1.0, 1.0});
        }
        for (int y = 0; y < ny; ++y) {
            const double p = p0(0, y);
            // t(0|1,y) = p - beta b / alpha
            planes.push_back({-p, b(y), 0.0});
            planes.push_back({p - 1.0, -b(y), 0.0});
            // t(0|0,y) = p + (1 - beta) b / alpha
            planes.push_back({-p, b(y), b(y)});
            planes.push_back({p - 1.0, -b(y), -b(y)});
        }
        const auto vertex = max_alpha_vertex(planes, tol);
        if (!vertex || (*vertex)(0) <= tol) return result;

        const double alpha = (*vertex)(0);
        const double beta = (*vertex)(1);
        for (int x = 0; x < nx; ++x) {
            const double s0 = std::clamp(alpha * a(x) + beta, 0.0, 1.0);
            c.s(0, x) = s0;
            c.s(1, x) = 1.0 - s0;
        }
        for (int y = 0; y < ny; ++y) {
            c.t0(1, y) = std::clamp(p0(0, y) - beta * b(y) / alpha, 0.0, 1.0);
            c.t0(0, y) = std::clamp(p0(0, y) + (1.0 - beta) * b(y) / alpha, 0.0, 1.0);
        }
    }

    result.residual = reconstruction_residual(behavior, c);
    result.found = result.residual <= tol;
    result.strategy = std::move(c);
    return result;
}

}  // namespace dimwit
