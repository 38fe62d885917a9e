#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dimwit {

using Complex = std::complex<double>;
using HermitianMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;

// Generalized Gell-Mann matrices for C^d. Ordering: symmetric pairs (j<k),
// then antisymmetric pairs (j<k), then the d-1 diagonal matrices.
struct GellMannBasis {
    int dim = 0;
    std::vector<HermitianMatrix> matrices;
    double phi_d = 0.0;  // sqrt(d(d-1)/2)

    std::size_t size() const { return matrices.size(); }

    // sum_i v_i * lambda_i
    HermitianMatrix combine(const RealVector& v) const;
    // components Tr(M lambda_i)/2, i.e. the inverse of combine() on traceless M
    RealVector coefficients(const HermitianMatrix& m) const;
};

GellMannBasis gellmann_basis(int d);

bool is_hermitian(const HermitianMatrix& m, double tol = kHermitianTol);
bool is_psd(const HermitianMatrix& m, double tol = kPsdTol);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const HermitianMatrix& m);

struct HermitianEigen {
    RealVector values;         // ascending
    Eigen::MatrixXcd vectors;  // columns
};
HermitianEigen hermitian_eigen(const HermitianMatrix& m);

// Determinant via Gaussian elimination with partial pivoting; closed form
// for k <= 3.
double determinant(const RealMatrix& m);

// Cofactor matrix C with C(i,j) = (-1)^(i+j) * minor(i,j).
RealMatrix cofactors(const RealMatrix& m);

// Generalized cross product of k vectors in R^(k+1). The result u satisfies
// V.u = det(rows S_0, ..., S_{k-1}, V) for every V.
RealVector cross_product(std::span<const RealVector> vectors);

}  // namespace dimwit
