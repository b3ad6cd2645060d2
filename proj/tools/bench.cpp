// Compares the OpenMP kernels against their serial references on a
// pipeline-scale independence null.

#include <chrono>
#include <cstdio>

#include "ct/complex.hpp"
#include "ct/localization.hpp"
#include "ct/nullmodel.hpp"
#include "ct/persistence.hpp"
#include "ct/signal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    const auto bm = ct::generate_independent({960, 40, 0.2, 7});
    const auto sm = ct::generate_series(960, 40, 7);

    const double build_serial =
        time_best_of(3, [&] { ct::build_filtered_complex_serial(bm, 5); });
    const double build_parallel =
        time_best_of(3, [&] { ct::build_filtered_complex(bm, 5); });
    std::printf("build_filtered_complex  serial %8.4fs  parallel %8.4fs  speedup %.2fx\n",
                build_serial, build_parallel, build_serial / build_parallel);

    const auto col = sm.column(0);
    const double dft_direct = time_best_of(3, [&] {
        for (int v = 0; v < sm.n_vars; ++v) ct::periodogram_direct(sm.column(v));
    });
    const double dft_fft = time_best_of(3, [&] {
        for (int v = 0; v < sm.n_vars; ++v) ct::periodogram(sm.column(v));
    });
    (void)col;
    std::printf("periodogram             direct %8.4fs  fft      %8.4fs  speedup %.2fx\n",
                dft_direct, dft_fft, dft_direct / dft_fft);

    const auto fc = ct::build_filtered_complex(bm, 2);
    ct::Localizer loc(fc);
    const double lifespans = time_best_of(3, [&] { loc.cycle_lifespans(1); });
    std::printf("cycle_lifespans(d=1)    %8.4fs (parallel over %lld levels)\n", lifespans,
                static_cast<long long>(fc.max_level));
    return 0;
}
