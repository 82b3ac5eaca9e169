#ifndef STRATA_LINALG_HPP
#define STRATA_LINALG_HPP

#include <vector>

#include "strata/rational.hpp"

namespace strata {

using RatRow = std::vector<Rational>;
using RatMat = std::vector<RatRow>;
using IntRow = std::vector<long long>;
using IntMat = std::vector<IntRow>;

/// In-place reduced row echelon form; returns the rank. Zero rows are dropped.
int rref(RatMat& m);

/// Basis of {x : m x = 0} as rows (m given as rows of the coefficient matrix).
RatMat nullspace(const RatMat& m, int ncols);

/// Scale a rational row to a primitive integer vector with positive leading entry.
IntRow to_primitive(const RatRow& row);

/// Canonical form of a span: RREF rows scaled to primitive integer vectors.
IntMat canonical_span(const IntMat& span, int ambient_dim);

RatMat to_rational(const IntMat& m);

}  // namespace strata

#endif
