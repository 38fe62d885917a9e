#include "dimwit/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace dimwit {

HermitianMatrix GellMannBasis::combine(const RealVector& v) const {
    if (static_cast<std::size_t>(v.size()) != matrices.size()) {
        throw std::invalid_argument("Gell-Mann vector has " + std::to_string(v.size()) +
                                    " components, expected " + std::to_string(matrices.size()));
    }
    HermitianMatrix out = HermitianMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < matrices.size(); ++i) out += v(static_cast<Eigen::Index>(i)) * matrices[i];
    return out;
}

RealVector GellMannBasis::coefficients(const HermitianMatrix& m) const {
    RealVector v(static_cast<Eigen::Index>(matrices.size()));
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = 0.5 * (m * matrices[i]).trace().real();
    }
    return v;
}

GellMannBasis gellmann_basis(int d) {
    if (d < 2) throw std::invalid_argument("Gell-Mann basis requires d >= 2, got " + std::to_string(d));

    GellMannBasis basis;
    basis.dim = d;
    basis.phi_d = std::sqrt(d * (d - 1) / 2.0);
    basis.matrices.reserve(static_cast<std::size_t>(d * d - 1));

    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            HermitianMatrix m = HermitianMatrix::Zero(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.matrices.push_back(std::move(m));
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            HermitianMatrix m = HermitianMatrix::Zero(d, d);
            m(j, k) = Complex(0.0, -1.0);
            m(k, j) = Complex(0.0, 1.0);
            basis.matrices.push_back(std::move(m));
        }
    }
    for (int l = 1; l < d; ++l) {
        HermitianMatrix m = HermitianMatrix::Zero(d, d);
        const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) m(j, j) = norm;
        m(l, l) = -l * norm;
        basis.matrices.push_back(std::move(m));
    }
    return basis;
}

bool is_hermitian(const HermitianMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

HermitianEigen hermitian_eigen(const HermitianMatrix& m) {
    // Symmetrize so round-off in the input cannot leak into the eigensolver.
    const HermitianMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const HermitianMatrix& m) {
    const HermitianMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

bool is_psd(const HermitianMatrix& m, double tol) {
    return min_eigenvalue(m) >= -tol;
}

double determinant(const RealMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const auto k = m.rows();
    switch (k) {
        case 0:
            return 1.0;
        case 1:
            return m(0, 0);
        case 2:
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        case 3:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        default:
            break;
    }

    RealMatrix a = m;
    double det = 1.0;
    for (Eigen::Index col = 0; col < k; ++col) {
        Eigen::Index pivot = col;
        for (Eigen::Index r = col + 1; r < k; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        }
        if (a(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        const double p = a(col, col);
        det *= p;
        for (Eigen::Index r = col + 1; r < k; ++r) {
            const double f = a(r, col) / p;
            if (f != 0.0) a.row(r).tail(k - col - 1) -= f * a.row(col).tail(k - col - 1);
        }
    }
    return det;
}

namespace {

RealMatrix drop_row_col(const RealMatrix& m, Eigen::Index row, Eigen::Index col) {
    const auto r = m.rows();
    const auto c = m.cols();
    RealMatrix out(r - (row >= 0 ? 1 : 0), c - 1);
    for (Eigen::Index i = 0, oi = 0; i < r; ++i) {
        if (i == row) continue;
        for (Eigen::Index j = 0, oj = 0; j < c; ++j) {
            if (j == col) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

}  // namespace

RealMatrix cofactors(const RealMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("cofactors of a non-square matrix");
    const auto k = m.rows();
    RealMatrix c(k, k);
    if (k == 1) {
        c(0, 0) = 1.0;
        return c;
    }
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            c(i, j) = sign * determinant(drop_row_col(m, i, j));
        }
    }
    return c;
}

RealVector cross_product(std::span<const RealVector> vectors) {
    const auto k = static_cast<Eigen::Index>(vectors.size());
    if (k == 0) throw std::invalid_argument("cross product needs at least one vector");
    RealMatrix stacked(k, k + 1);
    for (Eigen::Index r = 0; r < k; ++r) {
        const RealVector& v = vectors[static_cast<std::size_t>(r)];
        if (v.size() != k + 1) {
            throw std::invalid_argument("cross product of " + std::to_string(k) + " vectors needs length " +
                                        std::to_string(k + 1) + ", got " + std::to_string(v.size()));
        }
        stacked.row(r) = v.transpose();
    }
    RealVector u(k + 1);
    for (Eigen::Index i = 0; i <= k; ++i) {
        const double sign = ((k + i) % 2 == 0) ? 1.0 : -1.0;
        u(i) = sign * determinant(drop_row_col(stacked, -1, i));
    }
    return u;
}

}  // namespace dimwit
