#pragma once

#include <vector>

#include "dimwit/scenario.hpp"

namespace dimwit {

// Qubit strategy with preparations +z, -z, +x, -x and projective measurements
// along T_0 = cos(theta) z + sin(theta) x, T_1 = sin(theta) z - cos(theta) x.
QuantumStrategy bb84_strategy(double theta);

// d = k+1: even x sends x/2, odd x sends the sink message k; the measurement
// answers b = 0 iff y equals the message. Produces W_k = I_k.
ClassicalStrategy classical_identity_strategy(int k);

// Equal mixture of two deterministic bit strategies run with shared
// randomness. Not representable as a ClassicalStrategy.
Behavior correlated_mixture_behavior();

// 2k preparations at +-e_j/(d-1) along the first k Gell-Mann axes; effect i
// along e_i with offset at the midpoint of its feasible interval.
QuantumStrategy parallel_gellmann_strategy(int d, int k);

using Basis = Eigen::MatrixXcd;  // orthonormal columns

bool is_prime(int n);

// d+1 mutually unbiased bases for prime d: computational basis first.
std::vector<Basis> mub_bases(int d);

// Pair j uses basis j/(d-1) and its states r, r+1 with r = j mod (d-1); effect
// i projects onto the first state of pair i.
QuantumStrategy mub_strategy(int d, int k);

// d = 4 deterministic strategy whose W_2 is the 2x2 Hadamard matrix.
ClassicalStrategy classical_hadamard_strategy();

}  // namespace dimwit
