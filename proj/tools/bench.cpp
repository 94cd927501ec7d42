// Benchmark comparing the OpenMP kernels against their serial reference
// implementations: the surface height scan and mod-p point counting.
// Results must agree exactly; the benchmark reports the speedup.

#include <chrono>
#include <cstring>
#include <iostream>

#include "fourdescent/defaults.hpp"
#include "fourdescent/elliptic.hpp"
#include "fourdescent/surface.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same_points(const std::vector<fourdescent::SurfacePoint>& a,
                 const std::vector<fourdescent::SurfacePoint>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].t != b[i].t || a[i].x != b[i].x || a[i].y != b[i].y || a[i].z != b[i].z ||
            a[i].t_at_infinity != b[i].t_at_infinity ||
            a[i].x_at_infinity != b[i].x_at_infinity || a[i].boundary != b[i].boundary)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;
    long height = smoke ? 40 : 120;
    long prime = smoke ? 20011 : 999983;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    fourdescent::SurfaceModel S = fourdescent::defaults::surface();

    auto t0 = Clock::now();
    auto serial = fourdescent::search_rational_points_serial(S, height);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = fourdescent::search_rational_points(S, height);
    double tp = seconds_since(t0);
    if (!same_points(serial, parallel)) {
        std::cerr << "FAIL: surface scan results differ between kernels\n";
        return 1;
    }
    std::cout << "surface scan H=" << height << ": serial " << ts << " s, parallel " << tp
              << " s, speedup " << (tp > 0 ? ts / tp : 0.0) << ", points " << serial.size()
              << "\n";

    fourdescent::ShortWeierstrassCurve E = fourdescent::defaults::jacobian();
    t0 = Clock::now();
    long ns = fourdescent::count_points_mod_p_serial(E, prime);
    ts = seconds_since(t0);
    t0 = Clock::now();
    long np = fourdescent::count_points_mod_p(E, prime);
    tp = seconds_since(t0);
    if (ns != np) {
        std::cerr << "FAIL: point counts differ between kernels\n";
        return 1;
    }
    std::cout << "point count p=" << prime << ": serial " << ts << " s, parallel " << tp
              << " s, speedup " << (tp > 0 ? ts / tp : 0.0) << ", count " << ns << "\n";
    std::cout << "kernels agree\n";
    return 0;
}
