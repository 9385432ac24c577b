// Times the verification kernel with the serial reference path (jobs=1)
// against the OpenMP path, and checks both produce identical reports.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "maxline/enumeration.hpp"

using namespace maxline;

int main(int argc, char** argv) {
    std::vector<int> sizes = {5, 6, 7};
    std::vector<int> job_counts = {1, 2, 4};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
    }
#ifdef _OPENMP
    std::printf("openmp: %d procs available\n", omp_get_num_procs());
#else
    std::printf("openmp: not compiled in; every run uses the serial path\n");
#endif
    std::printf("%4s %6s %12s %10s %10s\n", "m", "jobs", "seconds", "speedup", "classes");

    for (int m : sizes) {
        double serial_time = 0.0;
        VerificationReport serial_report;
        for (int jobs : job_counts) {
            const VerificationReport r = verify_max(m, SearchMode::Exhaustive, jobs);
            if (jobs == 1) {
                serial_time = r.elapsed_seconds;
                serial_report = r;
            } else if (r.optimal_classes != serial_report.optimal_classes ||
                       r.max_phi_found != serial_report.max_phi_found) {
                std::fprintf(stderr, "mismatch between serial and %d-job run at m=%d\n", jobs, m);
                return 1;
            }
            std::printf("%4d %6d %12.3f %9.2fx %10lld\n", m, jobs, r.elapsed_seconds,
                        r.elapsed_seconds > 0 ? serial_time / r.elapsed_seconds : 0.0,
                        r.roots_examined);
            std::fflush(stdout);
        }
    }
    return 0;
}
