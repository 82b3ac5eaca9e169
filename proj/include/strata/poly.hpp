#ifndef STRATA_POLY_HPP
#define STRATA_POLY_HPP

#include <map>
#include <optional>
#include <string>

#include "strata/rational.hpp"

namespace strata {

/// Polynomial in b with nonnegative integer coefficients. Zero coefficients
/// are never stored; the zero polynomial is the empty map.
class GradedPoly {
public:
    GradedPoly() = default;

    static GradedPoly monomial(int degree, long long coeff);
    static GradedPoly one() { return monomial(0, 1); }

    long long coeff(int degree) const;
    void add_coeff(int degree, long long amount);

    bool is_zero() const { return coeffs_.empty(); }
    int max_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    const std::map<int, long long>& coeffs() const { return coeffs_; }

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<int, long long> coeffs_;
};

GradedPoly add(const GradedPoly& p, const GradedPoly& q);
GradedPoly mul(const GradedPoly& p, const GradedPoly& q);

/// Coefficient of degree k becomes coefficient of degree n-k.
/// Throws std::domain_error if max degree of p exceeds n.
GradedPoly reverse(const GradedPoly& p, int n);

/// Exact division by (1+b) with nonnegative quotient; nullopt when the
/// division leaves a remainder or a negative coefficient.
std::optional<GradedPoly> divide_one_plus_b(const GradedPoly& p);

/// Alternating coefficient sum p(-1).
long long eval_minus_one(const GradedPoly& p);

/// Degreewise minimum.
GradedPoly coeff_min(const GradedPoly& p, const GradedPoly& q);

/// Coefficientwise p-q when every difference is nonnegative; nullopt otherwise.
std::optional<GradedPoly> subtract_nonneg(const GradedPoly& p, const GradedPoly& q);

}  // namespace strata

#endif
