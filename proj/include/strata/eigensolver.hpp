#ifndef STRATA_EIGENSOLVER_HPP
#define STRATA_EIGENSOLVER_HPP

#include <cstddef>
#include <vector>

namespace strata {

/// Dense row-major matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);

/// C += A^T A and C += A A^T, exact-symmetric output (upper triangle computed,
/// mirrored).
void add_ata(DenseMatrix& c, const DenseMatrix& a);
void add_aat(DenseMatrix& c, const DenseMatrix& a);

double max_abs(const DenseMatrix& a);
double max_asymmetry(const DenseMatrix& a);

/// All eigenvalues of a symmetric matrix, ascending. Householder
/// tridiagonalization followed by implicit-shift QL. `parallel` switches the
/// O(n^2) reflector updates to the OpenMP kernels; the serial path is the
/// reference implementation.
std::vector<double> symmetric_eigenvalues(DenseMatrix a, bool parallel = false);

namespace detail {
/// Reduction to tridiagonal form (diagonal d, off-diagonal e), destroying a.
void householder_tridiag_serial(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e);
void householder_tridiag_parallel(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e);
/// Implicit-shift QL on a tridiagonal matrix; eigenvalues land in d.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e);
}  // namespace detail

}  // namespace strata

#endif
