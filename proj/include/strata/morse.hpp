#ifndef STRATA_MORSE_HPP
#define STRATA_MORSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/cohomology.hpp"

namespace strata {

/// One connected component of the critical set of a stratified Morse-Bott
/// function: its base F_a plus attracting/expanding cone or disc factors.
struct CriticalComponent {
    std::string name;
    SpacePtr base;                  // induced perversity baked into the expression
    std::vector<SpacePtr> stable;   // Cone/Disc factors, generalized Neumann side
    std::vector<SpacePtr> unstable; // Cone/Disc factors, generalized Dirichlet side
    Rational h_value;               // reporting/ordering only
};

struct MorseProblem {
    SpacePtr space;
    std::vector<CriticalComponent> components;
    std::string label;
};

void validate(const MorseProblem& p);

GradedPoly local_morse_poly(const CriticalComponent& c);
GradedPoly morse_polynomial(const MorseProblem& p);

/// Height-function problem of a suspension (optionally wrapped in products
/// with smooth factors, which become Morse-Bott bases by pullback).
MorseProblem suspension_height_problem(const SpacePtr& s);

/// Swap every component's stable and unstable lists (the -h problem).
MorseProblem flip_problem(const MorseProblem& p);

struct StrongCheck {
    GradedPoly morse;     // M
    GradedPoly poincare;  // P
    std::optional<GradedPoly> quotient;  // Q with M-P = (1+b)Q, absent on violation
    bool ok() const { return quotient.has_value(); }
};
StrongCheck check_strong(const MorseProblem& p);

struct AdjointDualityCheck {
    GradedPoly reversed_morse;  // b^n M(h)(1/b)
    GradedPoly adjoint_morse;   // M of the adjoint-perversity flipped problem
    bool ok() const { return reversed_morse == adjoint_morse; }
};
AdjointDualityCheck check_adjoint_duality(const MorseProblem& p);

struct RefinedCheck {
    bool applicable = false;             // requires self-dual perversities throughout
    GradedPoly refined;                  // M_re = min(M(h), M(-h))
    std::optional<GradedPoly> error;     // Qbar = M_re - P, absent on violation
    bool ok() const { return !applicable || error.has_value(); }
};
RefinedCheck refined_morse(const MorseProblem& p);

/// Degree k maps to true iff coefficient_k(M) == coefficient_k(P).
std::map<int, bool> perfectness(const MorseProblem& p);

struct LefschetzCheck {
    long long morse_at_minus_one;
    long long poincare_at_minus_one;
    bool ok() const { return morse_at_minus_one == poincare_at_minus_one; }
};
LefschetzCheck lefschetz(const MorseProblem& p);

}  // namespace strata

#endif
