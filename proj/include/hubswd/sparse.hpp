#pragma once
// Sparse operator over an ordered basis, complex entries permitted.

#include <Eigen/SparseCore>

#include <complex>
#include <string>

namespace hubswd {

struct SparseOperator {
    std::string basis_tag;
    Eigen::SparseMatrix<std::complex<double>> mat;

    int rows() const { return static_cast<int>(mat.rows()); }
    int cols() const { return static_cast<int>(mat.cols()); }
    double frobenius_norm() const { return mat.norm(); }
    bool is_hermitian(double tol) const;
};

// ||A B - B A||_F
double commutator_norm(const SparseOperator& a, const SparseOperator& b);

}  // namespace hubswd
