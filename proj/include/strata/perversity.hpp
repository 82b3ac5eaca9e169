#ifndef STRATA_PERVERSITY_HPP
#define STRATA_PERVERSITY_HPP

#include "strata/space.hpp"

namespace strata {

/// Orthogonal complement of w in the declared orthonormal middle basis.
Subspace orthocomplement(const Subspace& w, int ambient_dim);

/// Image of w under the star matrix, renormalized to canonical form.
Subspace star_image(const Subspace& w, const IntMat& star);

/// w == star(orthocomplement(w)), the Cheeger-space condition.
bool is_self_dual(const Subspace& w, int ambient_dim, const IntMat& star);

enum class PerversityTransform { Adjoint, PoincareDual };

/// Rebuilds the expression with every Cone/Suspension subspace replaced by
/// w^perp (Adjoint) or star(w^perp) (PoincareDual). PoincareDual requires a
/// star structure at every node with nonzero middle cohomology.
SpacePtr transform_perversity(const SpacePtr& s, PerversityTransform mode);

/// Middle cohomology structure of an arbitrary even-dimensional space: basis
/// from its global cohomology middle classes, star when one is known.
MiddleStructure link_middle(const SpaceExpr& link);

/// True iff every Cone/Suspension node subspace satisfies w = star(w^perp);
/// nodes over odd links or links without middle cohomology pass trivially.
/// Throws math_error when a decision needs a star structure that is missing.
bool all_nodes_self_dual(const SpaceExpr& s);

}  // namespace strata

#endif
