#pragma once

#include <array>
#include <optional>
#include <utility>

#include "dimwit/scenario.hpp"

namespace dimwit {

// Absolute threshold below which a witness value counts as null.
inline constexpr double kNullWitnessTol = 1e-9;

struct WitnessReport {
    int k = 0;
    RealMatrix matrix;
    double signed_det = 0.0;
    double value = 0.0;
    std::optional<double> relabeling_max;
};

// W(i, j) = p(2j, i) - p(2j+1, i). Requires 2k preparations and k measurements.
RealMatrix witness_matrix(const Behavior& behavior, int k);

WitnessReport witness_value(const Behavior& behavior, int k);

// The three ways of splitting preparations {0,1,2,3} into difference pairs.
using Pairing = std::array<std::pair<int, int>, 2>;
inline constexpr std::array<Pairing, 3> kPairings{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

double pairing_determinant(const Behavior& behavior, const Pairing& pairing);

// k = 2 only: |det W_2| maximized over the preparation pairings. The report
// carries the canonical pairing's matrix and determinant.
WitnessReport witness_relabeling_scan(const Behavior& behavior);

}  // namespace dimwit
