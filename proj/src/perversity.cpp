#include "strata/perversity.hpp"

#include "strata/cohomology.hpp"

namespace strata {

Subspace orthocomplement(const Subspace& w, int ambient_dim) {
    if (w.is_zero()) {
        // full ambient space
        IntMat full;
        for (int i = 0; i < ambient_dim; ++i) {
            IntRow row(ambient_dim, 0);
            row[i] = 1;
            full.push_back(std::move(row));
        }
        return Subspace::from_span(full, ambient_dim);
    }
    RatMat m = to_rational(w.span);
    RatMat basis = nullspace(m, ambient_dim);
    IntMat span;
    for (const RatRow& r : basis) span.push_back(to_primitive(r));
    return Subspace::from_span(span, ambient_dim);
}

Subspace star_image(const Subspace& w, const IntMat& star) {
    const int n = static_cast<int>(star.size());
    IntMat mapped;
    for (const IntRow& v : w.span) {
        if (static_cast<int>(v.size()) != n) throw input_error("subspace vector does not match star dimension");
        IntRow img(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) img[i] = checked_add(img[i], checked_mul(star[i][j], v[j]));
        mapped.push_back(std::move(img));
    }
    return Subspace::from_span(mapped, n);
}

bool is_self_dual(const Subspace& w, int ambient_dim, const IntMat& star) {
    return star_image(orthocomplement(w, ambient_dim), star) == w;
}

MiddleStructure link_middle(const SpaceExpr& link) {
    const int l = dimension(link);
    if (l % 2 != 0) throw input_error("middle structure requested for an odd-dimensional link");
    switch (link.kind) {
        case SpaceKind::Torus:
        case SpaceKind::Sphere:
        case SpaceKind::Smooth: return middle_structure(link);
        default: break;
    }
    GradedBasis g = global_cohomology(link);
    MiddleStructure m;
    m.basis = g.labels(l / 2);
    return m;  // no star structure for composite links
}

namespace {

Subspace node_transform(const SpaceExpr& node, PerversityTransform mode) {
    const int l = dimension(*node.link);
    if (l % 2 == 1) return Subspace::zero();
    MiddleStructure mid = link_middle(*node.link);
    if (mid.dim() == 0) return Subspace::zero();
    Subspace perp = orthocomplement(node.w, mid.dim());
    if (mode == PerversityTransform::Adjoint) return perp;
    if (!mid.star) throw math_error("Poincare dual transform needs a star structure on the link middle");
    return star_image(perp, *mid.star);
}

}  // namespace

SpacePtr transform_perversity(const SpacePtr& s, PerversityTransform mode) {
    switch (s->kind) {
        case SpaceKind::Cone:
        case SpaceKind::Suspension: {
            SpacePtr link = transform_perversity(s->link, mode);
            Subspace w = node_transform(*s, mode);
            return s->kind == SpaceKind::Cone ? make_cone(link, w) : make_suspension(link, w);
        }
        case SpaceKind::Product:
            return make_product(transform_perversity(s->left, mode), transform_perversity(s->right, mode));
        default: return s;
    }
}

bool all_nodes_self_dual(const SpaceExpr& s) {
    switch (s.kind) {
        case SpaceKind::Cone:
        case SpaceKind::Suspension: {
            if (!all_nodes_self_dual(*s.link)) return false;
            const int l = dimension(*s.link);
            if (l % 2 == 1) return true;
            MiddleStructure mid = link_middle(*s.link);
            if (mid.dim() == 0) return true;
            if (!mid.star) throw math_error("self-duality undecidable without a star structure on the link middle");
            return is_self_dual(s.w, mid.dim(), *mid.star);
        }
        case SpaceKind::Product: return all_nodes_self_dual(*s.left) && all_nodes_self_dual(*s.right);
        default: return true;
    }
}

}  // namespace strata
