#include "strata/space.hpp"

#include <stdexcept>

namespace strata {

GradedPoly GradedBasis::poly() const {
    GradedPoly p;
    for (const GradedClass& c : classes) p.add_coeff(c.degree, 1);
    return p;
}

int GradedBasis::dim(int degree) const {
    int n = 0;
    for (const GradedClass& c : classes)
        if (c.degree == degree) ++n;
    return n;
}

std::vector<std::string> GradedBasis::labels(int degree) const {
    std::vector<std::string> out;
    for (const GradedClass& c : classes)
        if (c.degree == degree) out.push_back(c.label);
    return out;
}

void check_star_sign(const MiddleStructure& m, int link_dim) {
    if (!m.star) return;
    const int n = m.dim();
    const IntMat& s = *m.star;
    if (static_cast<int>(s.size()) != n) throw input_error("star matrix size does not match middle basis");
    const int k = link_dim / 2;
    const long long want = (static_cast<long long>(k) * (link_dim - k)) % 2 == 0 ? 1 : -1;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(s[i].size()) != n) throw input_error("star matrix is not square");
        for (int j = 0; j < n; ++j) {
            long long acc = 0;
            for (int t = 0; t < n; ++t) acc = checked_add(acc, checked_mul(s[i][t], s[t][j]));
            long long expect = i == j ? want : 0;
            if (acc != expect) throw input_error("star matrix violates the star-squared sign law");
        }
    }
}

Subspace Subspace::from_span(IntMat vectors, int ambient_dim) {
    Subspace w;
    w.span = canonical_span(vectors, ambient_dim);
    return w;
}

namespace {
SpacePtr node(SpaceExpr e) { return std::make_shared<const SpaceExpr>(std::move(e)); }
}  // namespace

SpacePtr make_point() { return node({SpaceKind::Point}); }
SpacePtr make_circle() { return node({SpaceKind::Circle}); }

SpacePtr make_torus(int k) {
    if (k < 1) throw input_error("Torus(k) requires k >= 1");
    SpaceExpr e{SpaceKind::Torus};
    e.param = k;
    return node(std::move(e));
}

SpacePtr make_sphere(int k) {
    if (k < 1) throw input_error("Sphere(k) requires k >= 1");
    SpaceExpr e{SpaceKind::Sphere};
    e.param = k;
    return node(std::move(e));
}

SpacePtr make_disc(int m) {
    if (m < 1) throw input_error("Disc(m) requires m >= 1");
    SpaceExpr e{SpaceKind::Disc};
    e.param = m;
    return node(std::move(e));
}

SpacePtr make_smooth(std::string name, GradedBasis basis, std::optional<MiddleStructure> middle, int dim) {
    SpaceExpr e{SpaceKind::Smooth};
    e.name = std::move(name);
    int max_deg = 0;
    for (const GradedClass& c : basis.classes) {
        if (c.degree < 0) throw input_error("smooth basis class with negative degree");
        max_deg = std::max(max_deg, c.degree);
        for (const GradedClass& d : basis.classes)
            if (&c != &d && c.label == d.label) throw input_error("duplicate label in smooth basis");
    }
    e.smooth_dim = dim >= 0 ? dim : max_deg;
    if (max_deg > e.smooth_dim) throw input_error("smooth basis degree exceeds declared dimension");
    if (middle) check_star_sign(*middle, e.smooth_dim);
    e.smooth_basis = std::move(basis);
    e.smooth_middle = std::move(middle);
    return node(std::move(e));
}

SpacePtr make_cone(SpacePtr link, Subspace w) {
    if (!link) throw input_error("cone without a link");
    if (dimension(*link) < 1) throw input_error("cone link must have dimension >= 1");
    if (dimension(*link) % 2 == 1 && !w.is_zero())
        throw input_error("odd-dimensional link carries the zero perversity subspace");
    SpaceExpr e{SpaceKind::Cone};
    e.link = std::move(link);
    e.w = std::move(w);
    return node(std::move(e));
}

SpacePtr make_suspension(SpacePtr link, Subspace w) {
    if (!link) throw input_error("suspension without a link");
    if (dimension(*link) < 1) throw input_error("suspension link must have dimension >= 1");
    if (dimension(*link) % 2 == 1 && !w.is_zero())
        throw input_error("odd-dimensional link carries the zero perversity subspace");
    SpaceExpr e{SpaceKind::Suspension};
    e.link = std::move(link);
    e.w = std::move(w);
    return node(std::move(e));
}

SpacePtr make_product(SpacePtr left, SpacePtr right) {
    if (!left || !right) throw input_error("product with a missing factor");
    SpaceExpr e{SpaceKind::Product};
    e.left = std::move(left);
    e.right = std::move(right);
    return node(std::move(e));
}

int dimension(const SpaceExpr& s) {
    switch (s.kind) {
        case SpaceKind::Point: return 0;
        case SpaceKind::Circle: return 1;
        case SpaceKind::Torus:
        case SpaceKind::Sphere:
        case SpaceKind::Disc: return s.param;
        case SpaceKind::Smooth: return s.smooth_dim;
        case SpaceKind::Cone:
        case SpaceKind::Suspension: return dimension(*s.link) + 1;
        case SpaceKind::Product: return dimension(*s.left) + dimension(*s.right);
    }
    throw std::logic_error("unreachable space kind");
}

GradedBasis primitive_cohomology(const SpaceExpr& s) {
    GradedBasis b;
    switch (s.kind) {
        case SpaceKind::Point:
            b.classes = {{0, "1"}};
            return b;
        case SpaceKind::Circle:
            b.classes = {{0, "1"}, {1, "d\xce\xb8"}};
            return b;
        case SpaceKind::Torus: {
            const int k = s.param;
            // subsets of {dtheta_1..dtheta_k} in lexicographic mask order per degree
            for (int deg = 0; deg <= k; ++deg) {
                for (unsigned mask = 0; mask < (1u << k); ++mask) {
                    if (__builtin_popcount(mask) != deg) continue;
                    if (deg == 0) {
                        b.classes.push_back({0, "1"});
                        continue;
                    }
                    std::string label;
                    for (int j = 0; j < k; ++j) {
                        if (!(mask & (1u << j))) continue;
                        if (!label.empty()) label += "\xe2\x88\xa7";
                        label += "d\xce\xb8" + std::to_string(j + 1);
                    }
                    b.classes.push_back({deg, label});
                }
            }
            return b;
        }
        case SpaceKind::Sphere:
            b.classes = {{0, "1"}, {s.param, "vol"}};
            return b;
        case SpaceKind::Smooth: return s.smooth_basis;
        default: throw input_error("primitive cohomology requested for a non-primitive node");
    }
}

MiddleStructure middle_structure(const SpaceExpr& s) {
    const int d = dimension(s);
    if (d % 2 != 0) throw input_error("middle structure requested for an odd-dimensional space");
    switch (s.kind) {
        case SpaceKind::Torus:
            if (s.param == 2) {
                MiddleStructure m;
                m.basis = {"d\xce\xb8" "1", "d\xce\xb8" "2"};
                // star(dtheta1) = dtheta2, star(dtheta2) = -dtheta1
                m.star = IntMat{{0, -1}, {1, 0}};
                return m;
            }
            throw math_error("no built-in star structure for Torus(k) with k != 2");
        case SpaceKind::Sphere: return MiddleStructure{};  // H^{k/2}(S^k) = 0 for k >= 2
        case SpaceKind::Smooth:
            if (s.smooth_middle) return *s.smooth_middle;
            if (s.smooth_basis.dim(d / 2) == 0) return MiddleStructure{};
            throw math_error("smooth space has middle cohomology but no supplied star structure");
        case SpaceKind::Point: return MiddleStructure{};
        default: throw input_error("middle structure of composite spaces is derived from their cohomology");
    }
}

bool structurally_equal(const SpaceExpr& a, const SpaceExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case SpaceKind::Point:
        case SpaceKind::Circle: return true;
        case SpaceKind::Torus:
        case SpaceKind::Sphere:
        case SpaceKind::Disc: return a.param == b.param;
        case SpaceKind::Smooth: {
            if (a.name != b.name || a.smooth_dim != b.smooth_dim) return false;
            if (a.smooth_basis.classes.size() != b.smooth_basis.classes.size()) return false;
            for (size_t i = 0; i < a.smooth_basis.classes.size(); ++i) {
                if (a.smooth_basis.classes[i].degree != b.smooth_basis.classes[i].degree ||
                    a.smooth_basis.classes[i].label != b.smooth_basis.classes[i].label)
                    return false;
            }
            return true;
        }
        case SpaceKind::Cone:
        case SpaceKind::Suspension: return a.w == b.w && structurally_equal(*a.link, *b.link);
        case SpaceKind::Product:
            return structurally_equal(*a.left, *b.left) && structurally_equal(*a.right, *b.right);
    }
    return false;
}

}  // namespace strata
