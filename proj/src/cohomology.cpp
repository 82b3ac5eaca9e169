#include "strata/cohomology.hpp"

#include <stdexcept>

namespace strata {

namespace {

std::string combo_label(const IntRow& v, const std::vector<std::string>& basis) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        long long c = v[i];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += basis[i];
    }
    return out.empty() ? "0" : out;
}

MiddleStructure validated_middle(const SpaceExpr& node) {
    MiddleStructure mid = link_middle(*node.link);
    for (const IntRow& row : node.w.span)
        if (static_cast<int>(row.size()) != mid.dim())
            throw input_error("perversity subspace inconsistent with the link middle structure");
    return mid;
}

}  // namespace

GradedBasis cone_N(const SpaceExpr& cone) {
    if (cone.kind != SpaceKind::Cone) throw input_error("cone_N requires a Cone node");
    const int l = dimension(*cone.link);
    GradedBasis link_coh = global_cohomology(*cone.link);
    GradedBasis out;
    for (const GradedClass& c : link_coh.classes)
        if (2 * c.degree < l) out.classes.push_back(c);
    if (l % 2 == 0) {
        MiddleStructure mid = validated_middle(cone);
        for (const IntRow& v : cone.w.span) out.classes.push_back({l / 2, combo_label(v, mid.basis)});
    }
    return out;
}

GradedBasis cone_D(const SpaceExpr& cone) {
    if (cone.kind != SpaceKind::Cone) throw input_error("cone_D requires a Cone node");
    const int l = dimension(*cone.link);
    GradedBasis link_coh = global_cohomology(*cone.link);
    GradedBasis out;
    if (l % 2 == 0) {
        MiddleStructure mid = validated_middle(cone);
        Subspace perp = orthocomplement(cone.w, mid.dim());
        for (const IntRow& v : perp.span)
            out.classes.push_back({l / 2 + 1, "dx\xe2\x88\xa7" + combo_label(v, mid.basis)});
    }
    for (const GradedClass& c : link_coh.classes)
        if (2 * c.degree > l) out.classes.push_back({c.degree + 1, "dx\xe2\x88\xa7" + c.label});
    return out;
}

GradedBasis disc_N(const SpaceExpr& disc) {
    if (disc.kind != SpaceKind::Disc) throw input_error("disc_N requires a Disc node");
    return GradedBasis{{{0, "1"}}};
}

GradedBasis disc_D(const SpaceExpr& disc) {
    if (disc.kind != SpaceKind::Disc) throw input_error("disc_D requires a Disc node");
    return GradedBasis{{{disc.param, "vol"}}};
}

GradedBasis suspension_cohomology(const SpaceExpr& s) {
    if (s.kind != SpaceKind::Suspension) throw input_error("suspension_cohomology requires a Suspension node");
    const int l = dimension(*s.link);
    GradedBasis link_coh = global_cohomology(*s.link);
    GradedBasis out;
    for (const GradedClass& c : link_coh.classes)
        if (2 * c.degree < l) out.classes.push_back(c);
    if (l % 2 == 0) {
        MiddleStructure mid = validated_middle(s);
        for (const IntRow& v : s.w.span) out.classes.push_back({l / 2, combo_label(v, mid.basis)});
        Subspace perp = orthocomplement(s.w, mid.dim());
        for (const IntRow& v : perp.span)
            out.classes.push_back({l / 2 + 1, "d\xcf\x86\xe2\x88\xa7" + combo_label(v, mid.basis)});
    }
    for (const GradedClass& c : link_coh.classes)
        if (2 * c.degree > l) out.classes.push_back({c.degree + 1, "d\xcf\x86\xe2\x88\xa7" + c.label});
    return out;
}

GradedBasis global_cohomology(const SpaceExpr& s) {
    switch (s.kind) {
        case SpaceKind::Point:
        case SpaceKind::Circle:
        case SpaceKind::Torus:
        case SpaceKind::Sphere:
        case SpaceKind::Smooth: return primitive_cohomology(s);
        case SpaceKind::Suspension: return suspension_cohomology(s);
        case SpaceKind::Product: {
            GradedBasis a = global_cohomology(*s.left);
            GradedBasis b = global_cohomology(*s.right);
            GradedBasis out;
            for (const GradedClass& ca : a.classes) {
                for (const GradedClass& cb : b.classes) {
                    std::string label = ca.label == "1" ? cb.label
                                        : cb.label == "1" ? ca.label
                                                          : ca.label + "\xe2\x8a\x97" + cb.label;
                    out.classes.push_back({ca.degree + cb.degree, std::move(label)});
                }
            }
            return out;
        }
        case SpaceKind::Cone: throw input_error("Cone nodes have no global cohomology; cones live in critical components");
        case SpaceKind::Disc: throw input_error("Disc nodes have no global cohomology; discs live in critical components");
    }
    throw std::logic_error("unreachable space kind");
}

bool witt_check(const SpaceExpr& s) {
    switch (s.kind) {
        case SpaceKind::Cone:
        case SpaceKind::Suspension: {
            if (!witt_check(*s.link)) return false;
            const int l = dimension(*s.link);
            if (l % 2 == 1) return true;
            return link_middle(*s.link).dim() == 0;
        }
        case SpaceKind::Product: return witt_check(*s.left) && witt_check(*s.right);
        default: return true;
    }
}

}  // namespace strata
