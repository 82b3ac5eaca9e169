#ifndef STRATA_SPECTRAL_HPP
#define STRATA_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "strata/eigensolver.hpp"
#include "strata/space.hpp"

namespace strata {

enum class SpectralKind { SpindleCircle, SuspensionTorus2 };

/// Configuration of a discretized Witten-deformed Hodge Laplacian on one of
/// the two model suspensions: the spindle (suspension of a circle) and the
/// suspension of a 2-torus with a perversity subspace w of its middle
/// cohomology.
struct SpectralModel {
    SpectralKind kind = SpectralKind::SpindleCircle;
    Subspace w;                       // SuspensionTorus2 only; spindle links carry no choice
    int grid_points = 200;            // radial cells on [0, pi]
    int mode_cutoff = 3;              // Fourier modes kept per circle direction
    std::vector<double> epsilons;
    std::optional<double> threshold;  // absent = automatic gap detection
};

/// 1 for SpindleCircle, 2 for SuspensionTorus2.
int link_dimension(const SpectralModel& m);

void validate(const SpectralModel& m);

/// Discrete complex of a single Fourier mode in the mass-symmetrized frame:
/// d[k] maps degree-k coefficients to degree k+1 and satisfies d[k+1]*d[k]=0
/// exactly; laplacian[k] = d[k]^T d[k] + d[k-1] d[k-1]^T.
struct ModeOperator {
    int top_degree = 0;
    std::vector<DenseMatrix> d;          // size top_degree
    std::vector<DenseMatrix> laplacian;  // size top_degree + 1
};

ModeOperator assemble_mode_operator(const SpectralModel& m, const std::vector<int>& mode, double eps);

struct DegreeSpectrum {
    std::vector<double> low_eigenvalues;  // smallest few, ascending
    int small_count = 0;                  // eigenvalues <= threshold
    double gap_ratio = 0.0;  // smallest excluded / largest included; +inf when nothing is included
};

struct SpectrumReport {
    double epsilon = 0.0;
    double threshold = 0.0;  // the resolved cut c
    std::vector<DegreeSpectrum> degrees;

    std::vector<int> counts() const;
    bool gaps_at_least(double ratio) const;
};

/// Aggregates eigenvalues of every Fourier mode up to the cutoff, sorted per
/// degree, and applies the threshold. `threads` bounds the per-mode
/// parallelism; results are merged in a fixed order, so output does not
/// depend on it.
SpectrumReport spectrum(const SpectralModel& m, double eps, int threads = 1);

struct SweepResult {
    std::vector<SpectrumReport> reports;  // ascending epsilon
    bool stable = false;
};

/// Runs spectrum() for every epsilon (at least two required). The verdict is
/// true iff the small counts stay constant from the smallest epsilon whose
/// gap ratio reaches 10 in every degree onward.
SweepResult sweep(const SpectralModel& m, int threads = 1);

}  // namespace strata

#endif
