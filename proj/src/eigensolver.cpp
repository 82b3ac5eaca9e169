#include "strata/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strata {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

void add_ata(DenseMatrix& c, const DenseMatrix& a) {
    const int n = a.cols();
    if (c.rows() != n || c.cols() != n) throw std::invalid_argument("add_ata dimension mismatch");
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < a.rows(); ++k) s += a(k, i) * a(k, j);
            c(i, j) += s;
            if (j != i) c(j, i) = c(i, j);
        }
    }
}

void add_aat(DenseMatrix& c, const DenseMatrix& a) {
    const int n = a.rows();
    if (c.rows() != n || c.cols() != n) throw std::invalid_argument("add_aat dimension mismatch");
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < a.cols(); ++k) s += a(i, k) * a(j, k);
            c(i, j) += s;
            if (j != i) c(j, i) = c(i, j);
        }
    }
}

double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j)));
    return m;
}

double max_asymmetry(const DenseMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j) - a(j, i)));
    return m;
}

namespace detail {

namespace {

template <bool Parallel>
void householder_tridiag_impl(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e) {
    const int n = a.rows();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    if (n == 0) return;
    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double scale = 0.0;
        double h = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                // form A*u and the rank-two update; these O(n^2) loops carry
                // essentially all the flops
#pragma omp parallel for schedule(static) if (Parallel)
                for (int j = 0; j <= l; ++j) {
                    double s = 0.0;
                    for (int k = 0; k <= j; ++k) s += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) s += a(k, j) * a(i, k);
                    e[j] = s / h;
                }
                f = 0.0;
                for (int j = 0; j <= l; ++j) f += e[j] * a(i, j);
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) e[j] -= hh * a(i, j);
#pragma omp parallel for schedule(static) if (Parallel)
                for (int j = 0; j <= l; ++j) {
                    const double fj = a(i, j);
                    const double gj = e[j];
                    for (int k = 0; k <= j; ++k) a(j, k) -= fj * e[k] + gj * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
}

}  // namespace

void householder_tridiag_serial(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e) {
    householder_tridiag_impl<false>(a, d, e);
}

void householder_tridiag_parallel(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e) {
    householder_tridiag_impl<true>(a, d, e);
}

void tridiag_ql(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (++iter == 60) throw std::runtime_error("eigensolver failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace detail

std::vector<double> symmetric_eigenvalues(DenseMatrix a, bool parallel) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigensolver needs a square matrix");
    std::vector<double> d, e;
    if (parallel)
        detail::householder_tridiag_parallel(a, d, e);
    else
        detail::householder_tridiag_serial(a, d, e);
    detail::tridiag_ql(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace strata
