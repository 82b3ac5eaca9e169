#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "strata/spectral.hpp"

using namespace strata;

namespace {

SpectralModel spindle(int n = 60) {
    SpectralModel m;
    m.kind = SpectralKind::SpindleCircle;
    m.grid_points = n;
    m.mode_cutoff = 2;
    m.epsilons = {0.0, 5.0};
    return m;
}

SpectralModel torus2(Subspace w, int n = 60) {
    SpectralModel m;
    m.kind = SpectralKind::SuspensionTorus2;
    m.w = std::move(w);
    m.grid_points = n;
    m.mode_cutoff = 2;
    m.epsilons = {0.0, 5.0};
    return m;
}

double d_squared_norm(const ModeOperator& op) {
    double worst = 0.0;
    for (size_t k = 0; k + 1 < op.d.size(); ++k) worst = std::max(worst, max_abs(matmul(op.d[k + 1], op.d[k])));
    return worst;
}

std::vector<double> positive_spectrum(const ModeOperator& op, int parity) {
    std::vector<double> out;
    for (int k = parity; k <= op.top_degree; k += 2) {
        std::vector<double> ev = symmetric_eigenvalues(op.laplacian[k]);
        for (double v : ev)
            if (v > 1e-8) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(validate(spindle(40)), input_error);
    SpectralModel with_w = spindle();
    with_w.w = Subspace::from_span({{1}}, 1);
    CHECK_THROWS_AS(validate(with_w), input_error);
    SpectralModel neg = spindle();
    neg.epsilons = {-1.0};
    CHECK_THROWS_AS(validate(neg), input_error);
    SpectralModel zero_cut = spindle();
    zero_cut.threshold = 0.0;
    CHECK_THROWS_AS(validate(zero_cut), input_error);
    validate(torus2(Subspace::from_span({{1, 0}}, 2)));

    CHECK_THROWS_AS(assemble_mode_operator(spindle(), {0, 0}, 1.0), input_error);
    CHECK_THROWS_AS(assemble_mode_operator(spindle(), {5}, 1.0), input_error);
    CHECK_THROWS_AS(assemble_mode_operator(spindle(), {0}, 1e6), input_error);
}

TEST_CASE("discrete complex: d squared vanishes and laplacians are symmetric") {
    for (double eps : {0.0, 3.0, 10.0}) {
        for (std::vector<int> mode : {std::vector<int>{0}, {1}, {2}}) {
            ModeOperator op = assemble_mode_operator(spindle(), mode, eps);
            REQUIRE(op.top_degree == 2);
            CHECK(d_squared_norm(op) < 1e-10);
            for (const DenseMatrix& lap : op.laplacian)
                CHECK(max_asymmetry(lap) <= 1e-12 * std::max(1.0, max_abs(lap)));
        }
        SpectralModel t = torus2(Subspace::from_span({{1, 1}}, 2));
        for (std::vector<int> mode : {std::vector<int>{0, 0}, {1, 0}, {0, 2}, {-1, 2}}) {
            ModeOperator op = assemble_mode_operator(t, mode, eps);
            REQUIRE(op.top_degree == 3);
            CHECK(d_squared_norm(op) < 1e-10);
            for (const DenseMatrix& lap : op.laplacian)
                CHECK(max_asymmetry(lap) <= 1e-12 * std::max(1.0, max_abs(lap)));
        }
    }
}

TEST_CASE("nonzero modes are bounded below by the angular frequency") {
    SpectralModel t = torus2(Subspace::from_span({{1, 0}}, 2));
    for (std::vector<int> mode : {std::vector<int>{1, 0}, {2, 1}, {-2, 2}}) {
        const double m2 = mode[0] * mode[0] + mode[1] * mode[1];
        ModeOperator op = assemble_mode_operator(t, mode, 0.0);
        for (const DenseMatrix& lap : op.laplacian) {
            std::vector<double> ev = symmetric_eigenvalues(lap);
            if (!ev.empty()) CHECK(ev.front() >= 0.9 * m2);
        }
    }
}

TEST_CASE("supersymmetry pairs the nonzero spectrum across parities") {
    ModeOperator op = assemble_mode_operator(torus2(Subspace::from_span({{1, 0}}, 2)), {1, 1}, 4.0);
    std::vector<double> even = positive_spectrum(op, 0);
    std::vector<double> odd = positive_spectrum(op, 1);
    REQUIRE(even.size() == odd.size());
    for (size_t i = 0; i < even.size(); ++i)
        CHECK(std::abs(even[i] - odd[i]) <= 1e-6 * odd[i]);
}

TEST_CASE("small-eigenvalue counts match the global cohomology") {
    for (double eps : {0.0, 5.0}) {
        CHECK(spectrum(spindle(), eps).counts() == std::vector<int>{1, 0, 1});
        CHECK(spectrum(torus2(Subspace::from_span({{1, 0}}, 2)), eps).counts() ==
              std::vector<int>{1, 1, 1, 1});
        CHECK(spectrum(torus2(Subspace::from_span({{1, 1}}, 2)), eps).counts() ==
              std::vector<int>{1, 1, 1, 1});
        CHECK(spectrum(torus2(Subspace::zero()), eps).counts() == std::vector<int>{1, 0, 2, 1});
        CHECK(spectrum(torus2(Subspace::from_span({{1, 0}, {0, 1}}, 2)), eps).counts() ==
              std::vector<int>{1, 2, 0, 1});
    }

    // the zero mode alone already carries the cohomology
    SpectralModel m0 = spindle();
    m0.mode_cutoff = 0;
    CHECK(spectrum(m0, 5.0).counts() == std::vector<int>{1, 0, 1});
}

TEST_CASE("reports") {
    SpectrumReport r = spectrum(spindle(), 5.0);
    CHECK(r.epsilon == 5.0);
    CHECK(r.threshold > 0.0);
    CHECK(r.gaps_at_least(10.0));
    for (const DegreeSpectrum& d : r.degrees) {
        CHECK(!d.low_eigenvalues.empty());
        CHECK(std::is_sorted(d.low_eigenvalues.begin(), d.low_eigenvalues.end()));
    }
    // degree 1 has nothing below the cut, so its ratio is +inf
    CHECK(std::isinf(r.degrees[1].gap_ratio));
}

TEST_CASE("thread count does not change the result") {
    SpectralModel t = torus2(Subspace::from_span({{1, 0}}, 2));
    SpectrumReport one = spectrum(t, 5.0, 1);
    SpectrumReport four = spectrum(t, 5.0, 4);
    REQUIRE(one.degrees.size() == four.degrees.size());
    CHECK(one.threshold == four.threshold);
    for (size_t k = 0; k < one.degrees.size(); ++k) {
        CHECK(one.degrees[k].small_count == four.degrees[k].small_count);
        CHECK(one.degrees[k].low_eigenvalues == four.degrees[k].low_eigenvalues);
    }
}

TEST_CASE("sweep") {
    SpectralModel m = spindle();
    m.epsilons = {5.0};
    CHECK_THROWS_AS(sweep(m), input_error);

    m.epsilons = {5.0, 0.0, 10.0};  // unsorted on purpose
    SweepResult r = sweep(m);
    REQUIRE(r.reports.size() == 3);
    CHECK(r.reports.front().epsilon == 0.0);
    CHECK(r.reports.back().epsilon == 10.0);
    CHECK(r.stable);
    for (const SpectrumReport& rep : r.reports) CHECK(rep.counts() == std::vector<int>{1, 0, 1});
}
