// Timing comparison of the OpenMP mesh reduction against the serial reference.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "tentops/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tentops;

namespace {

double time_ms(const DiskMesh& mesh, const std::function<double(Complex)>& density,
               bool parallel, int reps, double& out) {
    const auto t0 = std::chrono::steady_clock::now();
    double acc = 0.0;
    for (int i = 0; i < reps; ++i)
        acc += parallel ? integrate_mesh(mesh, density)
                        : integrate_mesh_serial(mesh, density);
    const auto t1 = std::chrono::steady_clock::now();
    out = acc / reps;
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, serial build\n");
#endif
    const auto density = [](Complex z) {
        return 1.0 / std::pow(std::norm(1.0 - 0.995 * z), 1.5);
    };
    QuadratureSpec spec;
    for (int levels : {10, 12, 14}) {
        spec.radial_levels = levels;
        const DiskMesh mesh = build_disk_mesh(spec, 1.0);
        double v_par = 0.0, v_ser = 0.0;
        const int reps = 5;
        const double ms_ser = time_ms(mesh, density, false, reps, v_ser);
        const double ms_par = time_ms(mesh, density, true, reps, v_par);
        std::printf("levels=%2d nodes=%zu serial %8.3f ms  parallel %8.3f ms  "
                    "speedup %5.2fx  identical=%s\n",
                    levels, mesh.z.size(), ms_ser, ms_par, ms_ser / ms_par,
                    v_par == v_ser ? "yes" : "NO");
        if (v_par != v_ser) return 1;
    }
    return 0;
}
