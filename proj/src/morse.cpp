#include "strata/morse.hpp"

namespace strata {

namespace {

void check_factor(const SpacePtr& f) {
    if (!f || (f->kind != SpaceKind::Cone && f->kind != SpaceKind::Disc))
        throw input_error("stable/unstable factors must be Cone or Disc nodes");
}

MorseProblem map_problem(const MorseProblem& p, PerversityTransform mode) {
    MorseProblem out;
    out.space = transform_perversity(p.space, mode);
    out.label = p.label;
    for (const CriticalComponent& c : p.components) {
        CriticalComponent t;
        t.name = c.name;
        t.h_value = c.h_value;
        t.base = transform_perversity(c.base, mode);
        for (const SpacePtr& f : c.stable) t.stable.push_back(transform_perversity(f, mode));
        for (const SpacePtr& f : c.unstable) t.unstable.push_back(transform_perversity(f, mode));
        out.components.push_back(std::move(t));
    }
    return out;
}

}  // namespace

void validate(const MorseProblem& p) {
    if (!p.space) throw input_error("morse problem without a space");
    const int n = dimension(p.space);
    for (const CriticalComponent& c : p.components) {
        if (!c.base) throw input_error("critical component without a base");
        int total = dimension(c.base);
        for (const SpacePtr& f : c.stable) {
            check_factor(f);
            total += dimension(f);
        }
        for (const SpacePtr& f : c.unstable) {
            check_factor(f);
            total += dimension(f);
        }
        if (total != n)
            throw input_error("critical component '" + c.name + "' dimensions sum to " + std::to_string(total) +
                              ", ambient dimension is " + std::to_string(n));
        for (const CriticalComponent& d : p.components)
            if (&c != &d && c.name == d.name) throw input_error("duplicate component name '" + c.name + "'");
    }
}

GradedPoly local_morse_poly(const CriticalComponent& c) {
    GradedPoly p = global_cohomology(c.base).poly();
    for (const SpacePtr& f : c.stable)
        p = mul(p, (f->kind == SpaceKind::Disc ? disc_N(*f) : cone_N(*f)).poly());
    for (const SpacePtr& f : c.unstable)
        p = mul(p, (f->kind == SpaceKind::Disc ? disc_D(*f) : cone_D(*f)).poly());
    return p;
}

GradedPoly morse_polynomial(const MorseProblem& p) {
    GradedPoly m;
    for (const CriticalComponent& c : p.components) m = add(m, local_morse_poly(c));
    return m;
}

MorseProblem suspension_height_problem(const SpacePtr& s) {
    // Peel product wrappers; exactly one suspension factor carries the height
    // function, the remaining factors form the Morse-Bott base by pullback.
    SpacePtr susp;
    SpacePtr base = make_point();
    std::vector<SpacePtr> pending{s};
    while (!pending.empty()) {
        SpacePtr cur = pending.back();
        pending.pop_back();
        if (cur->kind == SpaceKind::Product) {
            pending.push_back(cur->left);
            pending.push_back(cur->right);
        } else if (cur->kind == SpaceKind::Suspension) {
            if (susp) throw input_error("suspension height problem needs exactly one suspension factor");
            susp = cur;
        } else {
            base = base->kind == SpaceKind::Point ? cur : make_product(base, cur);
        }
    }
    if (!susp) throw input_error("suspension height problem requires a suspension factor");

    SpacePtr cone = make_cone(susp->link, susp->w);
    MorseProblem p;
    p.space = s;
    p.label = "suspension height function";
    CriticalComponent minimum{"min", base, {cone}, {}, Rational(-1)};
    CriticalComponent maximum{"max", base, {}, {cone}, Rational(1)};
    p.components = {std::move(minimum), std::move(maximum)};
    validate(p);
    return p;
}

MorseProblem flip_problem(const MorseProblem& p) {
    MorseProblem out = p;
    for (CriticalComponent& c : out.components) {
        std::swap(c.stable, c.unstable);
        c.h_value = -c.h_value;
    }
    return out;
}

StrongCheck check_strong(const MorseProblem& p) {
    StrongCheck r;
    r.morse = morse_polynomial(p);
    r.poincare = global_cohomology(p.space).poly();
    if (std::optional<GradedPoly> diff = subtract_nonneg(r.morse, r.poincare))
        r.quotient = divide_one_plus_b(*diff);
    return r;
}

AdjointDualityCheck check_adjoint_duality(const MorseProblem& p) {
    AdjointDualityCheck r;
    r.reversed_morse = reverse(morse_polynomial(p), dimension(p.space));
    r.adjoint_morse = morse_polynomial(flip_problem(map_problem(p, PerversityTransform::Adjoint)));
    return r;
}

RefinedCheck refined_morse(const MorseProblem& p) {
    RefinedCheck r;
    if (!all_nodes_self_dual(*p.space)) return r;
    for (const CriticalComponent& c : p.components) {
        if (!all_nodes_self_dual(*c.base)) return r;
        for (const SpacePtr& f : c.stable)
            if (!all_nodes_self_dual(*f)) return r;
        for (const SpacePtr& f : c.unstable)
            if (!all_nodes_self_dual(*f)) return r;
    }
    r.applicable = true;
    r.refined = coeff_min(morse_polynomial(p), morse_polynomial(flip_problem(p)));
    r.error = subtract_nonneg(r.refined, global_cohomology(p.space).poly());
    return r;
}

std::map<int, bool> perfectness(const MorseProblem& p) {
    GradedPoly m = morse_polynomial(p);
    GradedPoly pp = global_cohomology(p.space).poly();
    std::map<int, bool> out;
    for (int k = 0; k <= dimension(p.space); ++k) out[k] = m.coeff(k) == pp.coeff(k);
    return out;
}

LefschetzCheck lefschetz(const MorseProblem& p) {
    return {eval_minus_one(morse_polynomial(p)), eval_minus_one(global_cohomology(p.space).poly())};
}

}  // namespace strata
