// Benchmark comparing the OpenMP sweep kernels against the serial reference
// implementations; the outputs must agree exactly, the wall times are
// reported side by side.

#include "strobs/basis.hpp"
#include "strobs/kernels.hpp"
#include "strobs/series.hpp"
#include "strobs/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace strobs;
using Clock = std::chrono::steady_clock;

namespace {

int g_mismatches = 0;

template <typename F>
double time_of(F&& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_s, double parallel_s, bool equal) {
    if (!equal) ++g_mismatches;
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n",
                name.c_str(), serial_s, parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
                equal ? "identical" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    // small sizes with --smoke, benchmark sizes otherwise
    const bool smoke = argc > 1 && std::string(argv[1]) == "--smoke";
    const Metric eta;
    std::printf("threads available: %d\n", max_threads());

    {
        const unsigned bound = smoke ? 5 : 7;
        SweepResult a, b;
        (void)verify_jacobi(4, bound, eta, ExecMode::Serial); // warm the tables
        const double ts = time_of([&] { a = verify_jacobi(4, bound, eta, ExecMode::Serial); });
        const double tp = time_of([&] { b = verify_jacobi(4, bound, eta, ExecMode::Parallel); });
        row("jacobi sweep", ts, tp, a.pass == b.pass && a.dims == b.dims);
    }
    {
        const unsigned bound = smoke ? 4 : 6;
        SweepResult a, b;
        (void)verify_z2(4, 3, eta, ExecMode::Serial); // warm the tables
        const double ts = time_of([&] { a = verify_z2(4, bound, eta, ExecMode::Serial); });
        const double tp = time_of([&] { b = verify_z2(4, bound, eta, ExecMode::Parallel); });
        row("quantum invariant sweep", ts, tp, a.pass == b.pass && a.dims == b.dims);
    }
    {
        const unsigned bound = smoke ? 5 : 8;
        SweepResult a, b;
        const double ts = time_of([&] { a = verify_delta_leibniz(4, bound, eta, ExecMode::Serial); });
        const double tp = time_of([&] { b = verify_delta_leibniz(4, bound, eta, ExecMode::Parallel); });
        row("derivation rule sweep", ts, tp, a.pass == b.pass && a.dims == b.dims);
    }
    {
        const unsigned order = smoke ? 5 : 7;
        LogPhi a, b;
        // fresh tables per mode so the comparison is fair
        const double ts = time_of([&] { a = log_phi_expand(4, order, eta, ExecMode::Serial); });
        const double tp = time_of([&] { b = log_phi_expand(4, order, eta, ExecMode::Parallel); });
        bool equal = a.order == b.order;
        for (unsigned n = 1; equal && n <= a.order; ++n) equal = a.at(n).comps == b.at(n).comps;
        row("log series expansion", ts, tp, equal);
    }
    {
        const unsigned weight = smoke ? 3 : 5;
        SectorSpec spec;
        spec.dim = 4;
        spec.weight = weight;
        KernelSector a, b;
        const double ts = time_of([&] { a = quantum_kernel(spec, eta, ExecMode::Serial); });
        const double tp = time_of([&] { b = quantum_kernel(spec, eta, ExecMode::Parallel); });
        row("quantum kernel", ts, tp,
            a.kernel == b.kernel && a.per_degree_dims == b.per_degree_dims);
    }

    std::printf("%s\n", g_mismatches == 0 ? "all parallel kernels match the serial reference"
                                          : "MISMATCH between serial and parallel kernels");
    return g_mismatches == 0 ? 0 : 1;
}
