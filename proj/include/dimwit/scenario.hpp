#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dimwit/linalg.hpp"

namespace dimwit {

// Input has the wrong number of preparations or measurements for the request.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Binary-outcome prepare-and-measure data: p0(x, y) = p(b=0 | x, y).
class Behavior {
public:
    Behavior() = default;
    explicit Behavior(RealMatrix p0);

    int num_preparations() const { return static_cast<int>(p0_.rows()); }
    int num_measurements() const { return static_cast<int>(p0_.cols()); }
    double operator()(int x, int y) const { return p0_(x, y); }
    const RealMatrix& p0() const { return p0_; }

private:
    RealMatrix p0_;
};

// States rho_x and effects M_{0|y} on C^d. M_{1|y} = I - M_{0|y}.
struct QuantumStrategy {
    int dim = 0;
    std::vector<HermitianMatrix> states;
    std::vector<HermitianMatrix> effects;

    // Throws std::invalid_argument naming the first violated condition.
    void validate(double tol = kPsdTol) const;
};

// s(m, x) = s(m|x) is d x X; t0(m, y) = t(b=0|m,y) is d x Y.
struct ClassicalStrategy {
    int dim = 0;
    RealMatrix s;
    RealMatrix t0;

    int num_preparations() const { return static_cast<int>(s.cols()); }
    int num_measurements() const { return static_cast<int>(t0.cols()); }

    void validate(double tol = 1e-12) const;
};

Behavior behavior_from_quantum(const QuantumStrategy& strategy);
Behavior behavior_from_classical(const ClassicalStrategy& strategy);

// (1/d)(I + phi_d v.lambda). Only guaranteed PSD for |v| <= 1/(d-1).
HermitianMatrix bloch_to_state(const RealVector& v, const GellMannBasis& basis);
// Inverse of bloch_to_state on unit-trace Hermitian matrices.
RealVector state_to_bloch(const HermitianMatrix& rho, const GellMannBasis& basis);

// c I + (phi_d/d) v.lambda. Validity 0 <= M <= I is left to the caller.
HermitianMatrix vector_to_effect(double c, const RealVector& v, const GellMannBasis& basis);

bool is_valid_effect(const HermitianMatrix& m, double tol = kPsdTol);

// p(x,y) = eta p_Q(x,y) + (1 - eta) p_N(y).
Behavior apply_noise(const Behavior& behavior, double eta, const std::vector<double>& noise);

}  // namespace dimwit
