#include "dimwit/json_io.hpp"

#include <cmath>

namespace dimwit {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int positive_int(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 1) malformed(std::string("\"") + name + "\" must be a positive integer");
    return v.get<int>();
}

double number(const Json& v) {
    if (!v.is_number()) malformed("expected a number");
    return v.get<double>();
}

Json real_rows(const RealMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

RealMatrix real_matrix(const Json& j, Eigen::Index rows, Eigen::Index cols, const char* name) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
        malformed(std::string("\"") + name + "\" must have " + std::to_string(rows) + " rows");
    }
    RealMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            malformed(std::string("\"") + name + "\" rows must have " + std::to_string(cols) + " entries");
        }
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

}  // namespace

Json to_json(const Behavior& behavior) {
    return Json{{"preparations", behavior.num_preparations()},
                {"measurements", behavior.num_measurements()},
                {"p0", real_rows(behavior.p0())}};
}

Behavior behavior_from_json(const Json& j) {
    const int x = positive_int(j, "preparations");
    const int y = positive_int(j, "measurements");
    return Behavior(real_matrix(field(j, "p0"), x, y, "p0"));
}

Json to_json(const HermitianMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

HermitianMatrix hermitian_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) malformed("matrix must be a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    HermitianMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) malformed("matrix must be square");
        for (Eigen::Index c = 0; c < n; ++c) {
            const Json& entry = row[static_cast<std::size_t>(c)];
            if (!entry.is_array() || entry.size() != 2) malformed("matrix entries must be [re, im] pairs");
            m(r, c) = Complex(number(entry[0]), number(entry[1]));
        }
    }
    if (!is_hermitian(m)) malformed("matrix is not Hermitian");
    return m;
}

Json to_json(const QuantumStrategy& strategy) {
    Json states = Json::array();
    for (const auto& rho : strategy.states) states.push_back(to_json(rho));
    Json effects = Json::array();
    for (const auto& m : strategy.effects) effects.push_back(to_json(m));
    return Json{{"dim", strategy.dim}, {"states", std::move(states)}, {"effects", std::move(effects)}};
}

QuantumStrategy quantum_strategy_from_json(const Json& j) {
    QuantumStrategy q;
    q.dim = positive_int(j, "dim");
    for (const char* name : {"states", "effects"}) {
        const Json& list = field(j, name);
        if (!list.is_array()) malformed(std::string("\"") + name + "\" must be an array");
        auto& target = std::string(name) == "states" ? q.states : q.effects;
        for (const Json& m : list) {
            target.push_back(hermitian_from_json(m));
            if (target.back().rows() != q.dim) malformed("operator size does not match dim");
        }
    }
    q.validate();
    return q;
}

Json to_json(const ClassicalStrategy& strategy) {
    return Json{{"dim", strategy.dim}, {"s", real_rows(strategy.s)}, {"t0", real_rows(strategy.t0)}};
}

ClassicalStrategy classical_strategy_from_json(const Json& j) {
    ClassicalStrategy c;
    c.dim = positive_int(j, "dim");
    const Json& s = field(j, "s");
    const Json& t0 = field(j, "t0");
    const auto cols = [](const Json& m) -> Eigen::Index {
        return m.is_array() && !m.empty() && m[0].is_array() ? static_cast<Eigen::Index>(m[0].size()) : 0;
    };
    c.s = real_matrix(s, c.dim, cols(s), "s");
    c.t0 = real_matrix(t0, c.dim, cols(t0), "t0");
    c.validate();
    return c;
}

Json to_json(const WitnessReport& report) {
    Json j{{"k", report.k}, {"matrix", real_rows(report.matrix)}, {"det", report.signed_det}, {"value", report.value}};
    j["relabeling_max"] = report.relabeling_max ? Json(*report.relabeling_max) : Json(nullptr);
    return j;
}

Json to_json(const DecompositionResult& result) {
    Json j{{"found", result.found},
           {"residual", result.residual},
           {"second_singular_value", result.second_singular_value}};
    j["strategy"] = result.strategy ? to_json(*result.strategy) : Json(nullptr);
    return j;
}

Json to_json(const OptimizationResult& result) {
    Json values = Json::array();
    for (double v : result.restart_values) values.push_back(std::isnan(v) ? Json(nullptr) : Json(v));
    Json j{{"best_value", result.best_value},
           {"iterations_used", result.iterations_used},
           {"converged", result.converged},
           {"restart_values", std::move(values)}};
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            j["kind"] = std::is_same_v<T, QuantumStrategy> ? "quantum" : "classical";
            j["strategy"] = to_json(s);
        },
        result.best_strategy);
    return j;
}

}  // namespace dimwit
