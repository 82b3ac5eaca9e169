// Times the serial reference eigensolver against the OpenMP kernels.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "strata/eigensolver.hpp"

using namespace strata;

namespace {

DenseMatrix random_symmetric(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
    return a;
}

double time_solve(const DenseMatrix& a, bool parallel, double* checksum) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> ev = symmetric_eigenvalues(a, parallel);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    *checksum = 0.0;
    for (double v : ev) *checksum += v * v;
    return dt;
}

}  // namespace

int main(int argc, char** argv) {
    std::mt19937 rng(argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 12345u);
    std::printf("%6s %12s %12s %8s %10s\n", "n", "serial [s]", "parallel [s]", "speedup", "rel diff");
    for (int n : {200, 400, 800}) {
        DenseMatrix a = random_symmetric(n, rng);
        double cs = 0.0, cp = 0.0;
        const double ts = time_solve(a, false, &cs);
        const double tp = time_solve(a, true, &cp);
        std::printf("%6d %12.4f %12.4f %8.2f %10.2e\n", n, ts, tp, ts / tp,
                    std::abs(cs - cp) / std::max(1.0, std::abs(cs)));
    }
    return 0;
}
