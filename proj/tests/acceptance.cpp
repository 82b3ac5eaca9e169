// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "generators.hpp"
#include "strata/spectral.hpp"

using namespace strata;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

GradedPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
    GradedPoly p;
    for (const auto& [deg, c] : terms) p.add_coeff(deg, c);
    return p;
}

MorseProblem torus_with_extra_pair() {
    MorseProblem p = testgen::torus2_height();
    p.components.push_back({"s3", make_point(), {make_disc(1)}, {make_disc(1)}, Rational(0)});
    p.components.push_back({"max2", make_point(), {}, {make_disc(2)}, Rational(3)});
    return p;
}

bool all_perfect(const MorseProblem& p) {
    for (const auto& [deg, ok] : perfectness(p))
        if (!ok) return false;
    return true;
}

bool golden_examples() {
    bool ok = true;

    MorseProblem t = torus_with_extra_pair();
    validate(t);
    ok &= morse_polynomial(t) == poly({{0, 1}, {1, 3}, {2, 2}});
    ok &= morse_polynomial(flip_problem(t)) == poly({{0, 2}, {1, 3}, {2, 1}});
    StrongCheck strong = check_strong(t);
    ok &= strong.ok() && *strong.quotient == poly({{1, 1}});
    RefinedCheck refined = refined_morse(t);
    ok &= refined.applicable && refined.ok() && *refined.error == poly({{1, 1}});

    Subspace d1 = Subspace::from_span({{1, 0}}, 2);
    MorseProblem susp = suspension_height_problem(make_suspension(make_torus(2), d1));
    ok &= morse_polynomial(susp) == poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}}) && all_perfect(susp);

    MorseProblem dbl = suspension_height_problem(
        make_suspension(make_suspension(make_torus(2), d1), Subspace::zero()));
    ok &= morse_polynomial(dbl) == poly({{0, 1}, {1, 1}, {3, 1}, {4, 1}}) && all_perfect(dbl);

    Subspace full = Subspace::from_span({{1, 0}, {0, 1}}, 2);
    MorseProblem big = suspension_height_problem(make_suspension(make_torus(2), full));
    MorseProblem small_flipped =
        flip_problem(suspension_height_problem(make_suspension(make_torus(2), Subspace::zero())));
    ok &= morse_polynomial(big) == poly({{0, 1}, {1, 2}, {3, 1}});
    ok &= morse_polynomial(small_flipped) == poly({{0, 1}, {2, 2}, {3, 1}});
    ok &= reverse(morse_polynomial(big), 3) == morse_polynomial(small_flipped);
    ok &= check_adjoint_duality(big).ok();

    SpacePtr fourfold = make_smooth("fourfold", GradedBasis{{{0, "1"}, {2, "h"}, {4, "vol"}}});
    SpacePtr surface = make_smooth("surface", GradedBasis{{{0, "1"}, {2, "vol"}}});
    MorseProblem cone_sing;
    cone_sing.space = fourfold;
    cone_sing.components = {{"bottom", surface, {make_disc(2)}, {}, Rational(-1)},
                            {"cone_point", make_point(), {}, {make_disc(4)}, Rational(1)}};
    validate(cone_sing);
    ok &= morse_polynomial(cone_sing) == poly({{0, 1}, {2, 1}, {4, 1}}) && all_perfect(cone_sing);

    SpacePtr diag = make_suspension(make_torus(2), Subspace::from_span({{1, 1}}, 2));
    ok &= all_nodes_self_dual(*diag);
    ok &= global_cohomology(*diag).poly() == poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}});

    return ok;
}

bool property_suites() {
    return testgen::run_property_suite(500, testgen::fixed_seed()).total() == 0;
}

bool spectral_counts() {
    bool ok = true;

    SpectralModel spindle;
    spindle.kind = SpectralKind::SpindleCircle;
    spindle.grid_points = 400;
    spindle.mode_cutoff = 3;
    spindle.epsilons = {2.0, 5.0, 10.0, 20.0};
    SweepResult sr = sweep(spindle);
    ok &= sr.stable;
    for (const SpectrumReport& r : sr.reports) ok &= r.counts() == std::vector<int>{1, 0, 1};
    ok &= sr.reports.back().gaps_at_least(10.0);

    SpectralModel torus;
    torus.kind = SpectralKind::SuspensionTorus2;
    torus.w = Subspace::from_span({{1, 0}}, 2);
    torus.grid_points = 200;
    torus.mode_cutoff = 2;
    torus.epsilons = {5.0, 10.0, 20.0};
    SpacePtr space = make_suspension(make_torus(2), torus.w);
    GradedPoly m = morse_polynomial(suspension_height_problem(space));
    GradedPoly p = global_cohomology(*space).poly();
    SweepResult tr = sweep(torus);
    ok &= tr.stable;
    for (const SpectrumReport& r : tr.reports) {
        std::vector<int> counts = r.counts();
        for (size_t k = 0; k < counts.size(); ++k) ok &= counts[k] == m.coeff(static_cast<int>(k));
    }
    std::vector<int> flat = spectrum(torus, 0.0).counts();
    for (size_t k = 0; k < flat.size(); ++k) ok &= flat[k] == p.coeff(static_cast<int>(k));

    return ok;
}

bool discrete_invariants() {
    bool ok = true;

    SpectralModel torus;
    torus.kind = SpectralKind::SuspensionTorus2;
    torus.w = Subspace::from_span({{1, 0}}, 2);
    torus.grid_points = 100;
    torus.epsilons = {5.0};
    for (std::vector<int> mode : {std::vector<int>{0, 0}, {1, 0}, {1, 2}}) {
        ModeOperator op = assemble_mode_operator(torus, mode, 5.0);
        std::vector<std::vector<double>> by_degree(op.top_degree + 1);
        for (int k = 0; k <= op.top_degree; ++k) {
            const DenseMatrix& lap = op.laplacian[k];
            ok &= max_asymmetry(lap) < 1e-10 * std::max(1.0, max_abs(lap));
            by_degree[k] = symmetric_eigenvalues(lap);
            for (double v : by_degree[k]) ok &= v >= -1e-8;
        }
        std::vector<double> even, odd;
        for (int k = 0; k <= op.top_degree; ++k)
            for (double v : by_degree[k])
                if (v > 1e-8) (k % 2 == 0 ? even : odd).push_back(v);
        std::sort(even.begin(), even.end());
        std::sort(odd.begin(), odd.end());
        ok &= even.size() == odd.size();
        for (size_t i = 0; i < even.size() && i < odd.size(); ++i)
            ok &= std::abs(even[i] - odd[i]) <= 1e-6 * odd[i];
    }

    // the near-zero cluster shrinks as the grid is refined
    std::vector<SpectrumReport> refine;
    for (int n : {100, 200, 400}) {
        SpectralModel m = torus;
        m.grid_points = n;
        refine.push_back(spectrum(m, 5.0));
    }
    for (size_t step = 1; step < refine.size(); ++step)
        for (size_t k = 0; k < refine[step].degrees.size(); ++k) {
            const DegreeSpectrum& coarse = refine[step - 1].degrees[k];
            const DegreeSpectrum& fine = refine[step].degrees[k];
            ok &= coarse.small_count == fine.small_count;
            for (int i = 0; i < fine.small_count; ++i)
                ok &= fine.low_eigenvalues[i] <= coarse.low_eigenvalues[i] + 1e-10;
        }

    return ok;
}

bool poly_round_trips() {
    std::mt19937 rng(testgen::fixed_seed());
    std::uniform_int_distribution<int> deg(0, 12);
    std::uniform_int_distribution<long long> coeff(0, 1000);
    const GradedPoly one_plus_b = poly({{0, 1}, {1, 1}});
    for (int iter = 0; iter < 10000; ++iter) {
        GradedPoly p;
        const int top = deg(rng);
        for (int i = 0; i <= top; ++i) p.add_coeff(i, coeff(rng));
        auto q = divide_one_plus_b(mul(p, one_plus_b));
        if (!q || *q != p) return false;
        const int n = top + deg(rng);
        if (reverse(reverse(p, n), n) != p) return false;
    }
    return true;
}

int report(int index, const char* name, bool pass, double elapsed, double budget) {
    const bool ok = pass && elapsed < budget;
    std::printf("%d %s: %s (%.2f s)\n", index, name, ok ? "PASS" : "FAIL", elapsed);
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    struct Criterion {
        const char* name;
        bool (*run)();
        double budget;
    };
    const Criterion criteria[] = {
        {"golden example suite", golden_examples, 1.0},
        {"randomized property suites", property_suites, 30.0},
        {"spectral low-eigenvalue counts", spectral_counts, 300.0},
        {"discrete analysis invariants", discrete_invariants, 300.0},
        {"polynomial round-trips", poly_round_trips, 30.0},
    };
    int index = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = clock_type::now();
        bool pass = false;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            std::printf("%d %s: exception: %s\n", index + 1, c.name, e.what());
        }
        failures += report(++index, c.name, pass, seconds_since(t0), c.budget);
    }
    return failures == 0 ? 0 : 1;
}
