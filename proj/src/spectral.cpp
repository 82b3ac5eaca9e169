#include "strata/spectral.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace strata {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGapFloor = 1e-12;  // regularizes ratios against roundoff-level kernel values

struct Channel {
    int dphi;       // 0: coefficient lives on cell centers, 1: on grid nodes (dphi-component)
    unsigned mask;  // subset of circle directions carried as dtheta factors
    int degree;
    int q;          // weight exponent: sin^q(phi) mass density
};

std::vector<Channel> make_channels(int l) {
    std::vector<Channel> out;
    for (int dphi = 0; dphi <= 1; ++dphi)
        for (unsigned mask = 0; mask < (1u << l); ++mask) {
            const int p = std::popcount(mask);
            out.push_back({dphi, mask, p + dphi, l - 2 * p});
        }
    return out;
}

int channel_index(int l, int dphi, unsigned mask) { return dphi * (1 << l) + static_cast<int>(mask); }

/// Orthonormal basis of the orthogonal complement of w inside R^2.
std::vector<std::array<double, 2>> wperp_unit_basis(const Subspace& w) {
    if (w.dim() == 0) return {{1.0, 0.0}, {0.0, 1.0}};
    if (w.dim() == 2) return {};
    const double a = static_cast<double>(w.span[0][0]);
    const double b = static_cast<double>(w.span[0][1]);
    const double n = std::sqrt(a * a + b * b);
    return {{-b / n, a / n}};
}

double auto_threshold(const std::vector<DegreeSpectrum>& degrees) {
    std::vector<double> all;
    for (const DegreeSpectrum& d : degrees)
        all.insert(all.end(), d.low_eigenvalues.begin(), d.low_eigenvalues.end());
    std::sort(all.begin(), all.end());
    if (all.size() > 20) all.resize(20);
    if (all.size() < 2) return all.empty() ? kGapFloor : std::max(all[0], 0.0) + kGapFloor;
    double best_ratio = -1.0;
    double cut = 0.0;
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        const double lo = std::max(all[i], 0.0) + kGapFloor;
        const double hi = std::max(all[i + 1], 0.0) + kGapFloor;
        const double ratio = hi / lo;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            cut = std::sqrt(lo * hi);
        }
    }
    return cut;
}

}  // namespace

int link_dimension(const SpectralModel& m) { return m.kind == SpectralKind::SpindleCircle ? 1 : 2; }

void validate(const SpectralModel& m) {
    if (m.grid_points < 50) throw input_error("spectral model needs grid_points >= 50");
    if (m.mode_cutoff < 0) throw input_error("spectral model needs mode_cutoff >= 0");
    for (double e : m.epsilons)
        if (!(e >= 0.0)) throw input_error("epsilon values must be nonnegative");
    if (m.threshold && !(*m.threshold > 0.0)) throw input_error("threshold must be positive");
    if (m.kind == SpectralKind::SpindleCircle) {
        if (!m.w.is_zero()) throw input_error("the spindle link is a circle and admits no perversity subspace");
    } else {
        for (const IntRow& row : m.w.span)
            if (row.size() != 2) throw input_error("SuspensionTorus2 perversity vectors must have 2 entries");
    }
}

ModeOperator assemble_mode_operator(const SpectralModel& m, const std::vector<int>& mode, double eps) {
    validate(m);
    const int l = link_dimension(m);
    if (static_cast<int>(mode.size()) != l)
        throw input_error("mode tuple must have one entry per circle direction");
    for (int mj : mode)
        if (std::abs(mj) > m.mode_cutoff) throw input_error("mode component exceeds mode_cutoff");
    if (!(eps >= 0.0)) throw input_error("epsilon must be nonnegative");

    const int N = m.grid_points;
    const double h = std::numbers::pi / N;
    if (eps * h >= 2.0) throw input_error("epsilon too large for this grid resolution");
    const bool zero_mode = std::all_of(mode.begin(), mode.end(), [](int v) { return v == 0; });

    const std::vector<Channel> chans = make_channels(l);
    const int top = l + 1;

    // Bulk layout: cell-centered channels get N values at (i+1/2)h, node
    // channels N-1 interior values at jh; boundary degrees of freedom are
    // appended per degree afterwards.
    std::vector<int> size(top + 1, 0);
    std::vector<int> bulk_off(chans.size());
    for (size_t c = 0; c < chans.size(); ++c) {
        bulk_off[c] = size[chans[c].degree];
        size[chans[c].degree] += chans[c].dphi ? N - 1 : N;
    }

    // Boundary DOFs exist only in the zero mode, only on node channels, and
    // only where the reflection parity does not already kill the boundary
    // value: a mass-penalized scalar per negative-weight channel, and the
    // w-orthocomplement directions of the middle node channels.
    struct BoundaryDof {
        int degree;
        int offset;
        int end;  // 0: phi=0, 1: phi=pi
        std::vector<std::pair<int, double>> comp;  // (node channel, coefficient)
        double mass;
    };
    std::vector<BoundaryDof> bdofs;
    if (zero_mode) {
        for (int end = 0; end < 2; ++end) {
            for (size_t c = 0; c < chans.size(); ++c) {
                if (chans[c].dphi != 1 || chans[c].q >= 0) continue;
                const double mass = 0.5 * h * std::pow(std::sin(h / 4), chans[c].q);
                bdofs.push_back({chans[c].degree, size[chans[c].degree]++, end,
                                 {{static_cast<int>(c), 1.0}}, mass});
            }
            if (l == 2) {
                for (const std::array<double, 2>& u : wperp_unit_basis(m.w)) {
                    std::vector<std::pair<int, double>> comp;
                    for (int j = 0; j < 2; ++j)
                        if (u[j] != 0.0) comp.push_back({channel_index(l, 1, 1u << j), u[j]});
                    bdofs.push_back({2, size[2]++, end, std::move(comp), 0.5 * h});
                }
            }
        }
    }

    // Diagonal masses of the weighted L^2 inner product.
    std::vector<std::vector<double>> mass(top + 1);
    for (int k = 0; k <= top; ++k) mass[k].assign(size[k], 0.0);
    for (size_t c = 0; c < chans.size(); ++c) {
        const Channel& ch = chans[c];
        const int n = ch.dphi ? N - 1 : N;
        for (int r = 0; r < n; ++r) {
            const double phi = ch.dphi ? (r + 1) * h : (r + 0.5) * h;
            mass[ch.degree][bulk_off[c] + r] = h * std::pow(std::sin(phi), ch.q);
        }
    }
    for (const BoundaryDof& b : bdofs) mass[b.degree][b.offset] = b.mass;

    // Raw deformed differential d_eps = d - eps sin(phi) dphi /\ .
    std::vector<DenseMatrix> draw(top);
    for (int k = 0; k < top; ++k) draw[k] = DenseMatrix(size[k + 1], size[k]);

    // Radial part: cell channel -> node channel of the same mask.
    for (size_t c = 0; c < chans.size(); ++c) {
        if (chans[c].dphi != 0) continue;
        const int t = channel_index(l, 1, chans[c].mask);
        const int k = chans[c].degree;
        for (int j = 1; j <= N - 1; ++j) {
            const int row = bulk_off[t] + (j - 1);
            const double s = std::sin(j * h);
            draw[k](row, bulk_off[c] + j) += 1.0 / h - eps * s / 2;
            draw[k](row, bulk_off[c] + j - 1) += -1.0 / h - eps * s / 2;
        }
    }
    // Boundary rows: ghost-cell reflection leaves (I - R) a / h at the node,
    // projected onto the boundary DOF directions; the eps term vanishes there
    // since sin(phi) = 0 at the poles.
    for (const BoundaryDof& b : bdofs) {
        for (const auto& [t, coeff] : b.comp) {
            const int c = channel_index(l, 0, chans[t].mask);
            const int k = chans[c].degree;
            if (b.end == 0)
                draw[k](b.offset, bulk_off[c] + 0) += 2.0 * coeff / h;
            else
                draw[k](b.offset, bulk_off[c] + N - 1) += -2.0 * coeff / h;
        }
    }
    // Circle-direction part: diagonal coupling m_j with the sign of moving
    // dtheta_j past dphi and the earlier dtheta factors.
    for (size_t c = 0; c < chans.size(); ++c) {
        const Channel& ch = chans[c];
        for (int j = 0; j < l; ++j) {
            if (ch.mask & (1u << j)) continue;
            if (mode[j] == 0) continue;
            const int t = channel_index(l, ch.dphi, ch.mask | (1u << j));
            const int parity = ch.dphi + std::popcount(ch.mask & ((1u << j) - 1));
            const double coeff = (parity & 1 ? -1.0 : 1.0) * mode[j];
            const int n = ch.dphi ? N - 1 : N;
            for (int r = 0; r < n; ++r) draw[ch.degree](bulk_off[t] + r, bulk_off[c] + r) += coeff;
        }
    }

    ModeOperator op;
    op.top_degree = top;
    op.d.resize(top);
    for (int k = 0; k < top; ++k) {
        op.d[k] = DenseMatrix(size[k + 1], size[k]);
        for (int r = 0; r < size[k + 1]; ++r)
            for (int cc = 0; cc < size[k]; ++cc)
                if (draw[k](r, cc) != 0.0)
                    op.d[k](r, cc) = draw[k](r, cc) * std::sqrt(mass[k + 1][r] / mass[k][cc]);
    }
    op.laplacian.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        op.laplacian[k] = DenseMatrix(size[k], size[k]);
        if (k < top) add_ata(op.laplacian[k], op.d[k]);
        if (k > 0) add_aat(op.laplacian[k], op.d[k - 1]);
    }
    return op;
}

std::vector<int> SpectrumReport::counts() const {
    std::vector<int> out;
    for (const DegreeSpectrum& d : degrees) out.push_back(d.small_count);
    return out;
}

bool SpectrumReport::gaps_at_least(double ratio) const {
    for (const DegreeSpectrum& d : degrees)
        if (!(d.gap_ratio >= ratio)) return false;
    return true;
}

SpectrumReport spectrum(const SpectralModel& m, double eps, int threads) {
    validate(m);
    const int l = link_dimension(m);
    const int top = l + 1;
    const int M = m.mode_cutoff;

    // Spectra depend on the mode only through the multiset of |m_j| (sign
    // flips and coordinate swaps are conjugations), so solve one
    // representative per key and replicate.
    std::map<std::vector<int>, int> key_mult;
    if (l == 1) {
        for (int a = -M; a <= M; ++a) ++key_mult[{std::abs(a)}];
    } else {
        for (int a = -M; a <= M; ++a)
            for (int b = -M; b <= M; ++b) {
                std::vector<int> key{std::abs(a), std::abs(b)};
                std::sort(key.begin(), key.end());
                ++key_mult[key];
            }
    }
    std::vector<std::vector<int>> keys;
    keys.reserve(key_mult.size());
    for (const auto& [key, mult] : key_mult) keys.push_back(key);

    std::vector<std::vector<std::vector<double>>> solved(keys.size());
    std::string failure;
    if (threads < 1) threads = 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < static_cast<int>(keys.size()); ++i) {
        try {
            ModeOperator op = assemble_mode_operator(m, keys[i], eps);
            std::vector<std::vector<double>> per_degree(top + 1);
            for (int k = 0; k <= top; ++k) per_degree[k] = symmetric_eigenvalues(op.laplacian[k]);
            solved[i] = std::move(per_degree);
        } catch (const std::exception& e) {
#pragma omp critical
            if (failure.empty()) failure = e.what();
        }
    }
    if (!failure.empty()) throw math_error(failure);

    std::vector<std::vector<double>> agg(top + 1);
    for (size_t i = 0; i < keys.size(); ++i) {
        const int mult = key_mult.at(keys[i]);
        for (int k = 0; k <= top; ++k)
            for (int rep = 0; rep < mult; ++rep)
                agg[k].insert(agg[k].end(), solved[i][k].begin(), solved[i][k].end());
    }
    for (int k = 0; k <= top; ++k) {
        std::sort(agg[k].begin(), agg[k].end());
        if (!agg[k].empty() && agg[k].front() < -1e-8)
            throw math_error("assembled Laplacian produced eigenvalue " + std::to_string(agg[k].front()) +
                             " in degree " + std::to_string(k));
    }

    SpectrumReport report;
    report.epsilon = eps;
    report.degrees.resize(top + 1);
    for (int k = 0; k <= top; ++k) report.degrees[k].low_eigenvalues = agg[k];
    report.threshold = m.threshold ? *m.threshold : auto_threshold(report.degrees);

    for (int k = 0; k <= top; ++k) {
        DegreeSpectrum& d = report.degrees[k];
        const std::vector<double>& ev = agg[k];
        size_t incl = 0;
        while (incl < ev.size() && ev[incl] <= report.threshold) ++incl;
        d.small_count = static_cast<int>(incl);
        if (incl == 0 || incl == ev.size()) {
            d.gap_ratio = kInf;
        } else {
            const double lo = std::max(ev[incl - 1], 0.0) + kGapFloor;
            const double hi = std::max(ev[incl], 0.0) + kGapFloor;
            d.gap_ratio = hi / lo;
        }
        if (d.low_eigenvalues.size() > 12) d.low_eigenvalues.resize(12);
    }
    return report;
}

SweepResult sweep(const SpectralModel& m, int threads) {
    validate(m);
    if (m.epsilons.size() < 2) throw input_error("sweep needs at least two epsilon values");
    std::vector<double> eps = m.epsilons;
    std::sort(eps.begin(), eps.end());

    SweepResult out;
    for (double e : eps) out.reports.push_back(spectrum(m, e, threads));

    size_t first = out.reports.size();
    for (size_t i = 0; i < out.reports.size(); ++i)
        if (out.reports[i].gaps_at_least(10.0)) {
            first = i;
            break;
        }
    if (first < out.reports.size()) {
        out.stable = true;
        for (size_t i = first; i < out.reports.size(); ++i)
            if (out.reports[i].counts() != out.reports[first].counts()) out.stable = false;
    }
    return out;
}

}  // namespace strata
