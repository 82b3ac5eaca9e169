#ifndef STRATA_SPACE_HPP
#define STRATA_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strata/linalg.hpp"
#include "strata/poly.hpp"

namespace strata {

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

struct GradedClass {
    int degree;
    std::string label;
};

struct GradedBasis {
    std::vector<GradedClass> classes;

    GradedPoly poly() const;
    int dim(int degree) const;
    std::vector<std::string> labels(int degree) const;
};

/// Middle-degree cohomology basis of a link, with the Hodge-star action in
/// those coordinates when one is known.
struct MiddleStructure {
    std::vector<std::string> basis;
    std::optional<IntMat> star;  // star(e_j) = sum_i star[i][j] e_i

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Validates star*star = (-1)^{k(l-k)} with k = l/2 on an l-dimensional link.
void check_star_sign(const MiddleStructure& m, int link_dim);

/// Integer span of middle-degree link cohomology classes, kept in a canonical
/// primitive row-echelon form so equality is plain comparison.
struct Subspace {
    IntMat span;  // rows are spanning vectors; empty = zero subspace

    static Subspace zero() { return Subspace{}; }
    static Subspace from_span(IntMat vectors, int ambient_dim);

    int dim() const { return static_cast<int>(span.size()); }
    bool is_zero() const { return span.empty(); }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.span == b.span; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

struct SpaceExpr;
using SpacePtr = std::shared_ptr<const SpaceExpr>;

enum class SpaceKind { Point, Circle, Torus, Sphere, Smooth, Disc, Cone, Suspension, Product };

struct SpaceExpr {
    SpaceKind kind;
    int param = 0;  // Torus(k), Sphere(k), Disc(m)

    // Smooth
    std::string name;
    GradedBasis smooth_basis;
    std::optional<MiddleStructure> smooth_middle;
    int smooth_dim = 0;

    // Cone / Suspension
    SpacePtr link;
    Subspace w;

    // Product
    SpacePtr left, right;
};

SpacePtr make_point();
SpacePtr make_circle();
SpacePtr make_torus(int k);
SpacePtr make_sphere(int k);
SpacePtr make_disc(int m);
SpacePtr make_smooth(std::string name, GradedBasis basis, std::optional<MiddleStructure> middle = std::nullopt,
                     int dim = -1);
SpacePtr make_cone(SpacePtr link, Subspace w);
SpacePtr make_suspension(SpacePtr link, Subspace w);
SpacePtr make_product(SpacePtr left, SpacePtr right);

int dimension(const SpaceExpr& s);
inline int dimension(const SpacePtr& s) { return dimension(*s); }

/// Cohomology basis of a primitive node (Point/Circle/Torus/Sphere/Smooth).
GradedBasis primitive_cohomology(const SpaceExpr& s);

/// Middle-degree structure of an even-dimensional primitive; built in only for
/// Torus(2), Sphere(even) (empty) and user-supplied Smooth nodes.
MiddleStructure middle_structure(const SpaceExpr& s);

/// True iff every Cone/Suspension link is odd-dimensional or has no middle
/// cohomology.
bool witt_check(const SpaceExpr& s);

bool structurally_equal(const SpaceExpr& a, const SpaceExpr& b);

}  // namespace strata

#endif
