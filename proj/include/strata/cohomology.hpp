#ifndef STRATA_COHOMOLOGY_HPP
#define STRATA_COHOMOLOGY_HPP

#include "strata/perversity.hpp"
#include "strata/space.hpp"

namespace strata {

/// Cohomology of the cone C(z) with generalized Neumann conditions:
/// H^k(z) below the middle, the perversity subspace at the middle, nothing above.
GradedBasis cone_N(const SpaceExpr& cone);

/// Generalized Dirichlet conditions: nothing below, dx^(w-orthocomplement) at
/// degree l/2+1, dx^H^{k-1}(z) above.
GradedBasis cone_D(const SpaceExpr& cone);

GradedBasis disc_N(const SpaceExpr& disc);
GradedBasis disc_D(const SpaceExpr& disc);

GradedBasis suspension_cohomology(const SpaceExpr& s);

/// Recursive dispatch over a closed space expression (no Cone/Disc at global
/// scope): primitives, suspensions, Kunneth products.
GradedBasis global_cohomology(const SpaceExpr& s);
inline GradedBasis global_cohomology(const SpacePtr& s) { return global_cohomology(*s); }

}  // namespace strata

#endif
