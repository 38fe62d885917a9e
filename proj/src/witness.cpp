#include "dimwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dimwit {

RealMatrix witness_matrix(const Behavior& behavior, int k) {
    if (k < 1) throw std::invalid_argument("witness order k must be positive");
    if (behavior.num_preparations() != 2 * k || behavior.num_measurements() != k) {
        throw ShapeError("W_" + std::to_string(k) + " needs " + std::to_string(2 * k) + " preparations and " +
                         std::to_string(k) + " measurements, got " + std::to_string(behavior.num_preparations()) +
                         "x" + std::to_string(behavior.num_measurements()));
    }
    RealMatrix w(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) w(i, j) = behavior(2 * j, i) - behavior(2 * j + 1, i);
    }
    return w;
}

WitnessReport witness_value(const Behavior& behavior, int k) {
    WitnessReport report;
    report.k = k;
    report.matrix = witness_matrix(behavior, k);
    report.signed_det = determinant(report.matrix);
    report.value = std::abs(report.signed_det);
    return report;
}

double pairing_determinant(const Behavior& behavior, const Pairing& pairing) {
    const auto [a, b] = pairing[0];
    const auto [c, d] = pairing[1];
    const double w00 = behavior(a, 0) - behavior(b, 0);
    const double w01 = behavior(c, 0) - behavior(d, 0);
    const double w10 = behavior(a, 1) - behavior(b, 1);
    const double w11 = behavior(c, 1) - behavior(d, 1);
    return w00 * w11 - w01 * w10;
}

WitnessReport witness_relabeling_scan(const Behavior& behavior) {
    if (behavior.num_preparations() != 4 || behavior.num_measurements() != 2) {
        throw ShapeError("relabeling scan needs a 4x2 behavior");
    }
    WitnessReport report = witness_value(behavior, 2);
    double best = 0.0;
    for (const auto& pairing : kPairings) best = std::max(best, std::abs(pairing_determinant(behavior, pairing)));
    report.relabeling_max = best;
    return report;
}

}  // namespace dimwit
