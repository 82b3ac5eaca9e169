#include "strata/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

int rref(RatMat& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[sel], m[pivot_row]);
        Rational inv = Rational(1) / m[pivot_row][col];
        for (int c = col; c < cols; ++c) m[pivot_row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return pivot_row;
}

RatMat nullspace(const RatMat& m, int ncols) {
    RatMat red = m;
    rref(red);
    std::vector<int> pivot_col(red.size(), -1);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t r = 0; r < red.size(); ++r) {
        for (int c = 0; c < ncols; ++c) {
            if (!red[r][c].is_zero()) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
        }
    }
    RatMat basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatRow v(ncols, Rational(0));
        v[free_col] = Rational(1);
        for (size_t r = 0; r < red.size(); ++r) {
            if (pivot_col[r] >= 0) v[pivot_col[r]] = -red[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

IntRow to_primitive(const RatRow& row) {
    long long den_lcm = 1;
    for (const Rational& x : row) den_lcm = checked_mul(den_lcm / std::gcd(den_lcm, x.den()), x.den());
    IntRow out(row.size(), 0);
    long long g = 0;
    for (size_t i = 0; i < row.size(); ++i) {
        out[i] = checked_mul(row[i].num(), den_lcm / row[i].den());
        g = std::gcd(g, out[i] < 0 ? -out[i] : out[i]);
    }
    if (g > 1)
        for (long long& x : out) x /= g;
    for (long long x : out) {
        if (x != 0) {
            if (x < 0)
                for (long long& y : out) y = -y;
            break;
        }
    }
    return out;
}

IntMat canonical_span(const IntMat& span, int ambient_dim) {
    RatMat m;
    for (const IntRow& r : span) {
        if (static_cast<int>(r.size()) != ambient_dim)
            throw std::invalid_argument("subspace vector length does not match ambient dimension");
        RatRow rr(r.begin(), r.end());
        m.push_back(std::move(rr));
    }
    rref(m);
    IntMat out;
    for (const RatRow& r : m) out.push_back(to_primitive(r));
    return out;
}

RatMat to_rational(const IntMat& m) {
    RatMat out;
    for (const IntRow& r : m) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace strata
