#include "strata/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace strata {

GradedPoly GradedPoly::monomial(int degree, long long coeff) {
    GradedPoly p;
    p.add_coeff(degree, coeff);
    return p;
}

long long GradedPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

void GradedPoly::add_coeff(int degree, long long amount) {
    if (degree < 0) throw std::domain_error("negative degree in graded polynomial");
    if (amount == 0) return;
    long long& slot = coeffs_[degree];
    slot = checked_add(slot, amount);
    if (slot < 0) throw std::domain_error("negative coefficient in graded polynomial");
    if (slot == 0) coeffs_.erase(degree);
}

std::string GradedPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [deg, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        if (c != 1 || deg == 0) out << c;
        if (deg == 1)
            out << (c != 1 ? "*b" : "b");
        else if (deg > 1)
            out << (c != 1 ? "*b^" : "b^") << deg;
    }
    return out.str();
}

GradedPoly add(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r = p;
    for (const auto& [deg, c] : q.coeffs()) r.add_coeff(deg, c);
    return r;
}

GradedPoly mul(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r;
    for (const auto& [dp, cp] : p.coeffs())
        for (const auto& [dq, cq] : q.coeffs()) r.add_coeff(dp + dq, checked_mul(cp, cq));
    return r;
}

GradedPoly reverse(const GradedPoly& p, int n) {
    if (p.max_degree() > n) throw std::domain_error("degree overflow in polynomial reversal");
    GradedPoly r;
    for (const auto& [deg, c] : p.coeffs()) r.add_coeff(n - deg, c);
    return r;
}

std::optional<GradedPoly> divide_one_plus_b(const GradedPoly& p) {
    // p = (1+b) q forces q_k = p_k - q_{k-1} from the bottom up.
    GradedPoly q;
    long long prev = 0;
    const int top = p.max_degree();
    for (int k = 0; k <= top; ++k) {
        long long qk = checked_sub(p.coeff(k), prev);
        if (qk < 0) return std::nullopt;
        if (qk > 0) q.add_coeff(k, qk);
        prev = qk;
    }
    if (prev != 0) return std::nullopt;  // leftover remainder at degree top+1
    return q;
}

long long eval_minus_one(const GradedPoly& p) {
    long long acc = 0;
    for (const auto& [deg, c] : p.coeffs()) acc = checked_add(acc, deg % 2 == 0 ? c : -c);
    return acc;
}

GradedPoly coeff_min(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r;
    for (const auto& [deg, c] : p.coeffs()) {
        long long m = std::min(c, q.coeff(deg));
        if (m > 0) r.add_coeff(deg, m);
    }
    return r;
}

std::optional<GradedPoly> subtract_nonneg(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r;
    for (const auto& [deg, c] : q.coeffs())
        if (p.coeff(deg) < c) return std::nullopt;
    for (const auto& [deg, c] : p.coeffs()) {
        long long d = checked_sub(c, q.coeff(deg));
        if (d > 0) r.add_coeff(deg, d);
    }
    return r;
}

}  // namespace strata
