#include "fourdescent/defaults.hpp"

namespace fourdescent {
namespace defaults {

QuarticCurveModel quartic() {
    return QuarticCurveModel{Rat(3), Rat(-162), Rat(-351), Rat(-729)};
}

std::array<Rat, 4> epsilon_coords() {
    return {Rat(27), Rat(29), Rat(-1), Rat(-1, 3)};
}

ShortWeierstrassCurve jacobian() { return ShortWeierstrassCurve{Rat(0), Rat(-1221)}; }

Poly surface_p() { return Poly({Rat(1), Rat(0), Rat(1)}); }

Poly surface_q() { return Poly({Rat(2), Rat(0), Rat(1)}); }

SurfaceModel surface() { return SurfaceModel{quartic().quartic(), surface_p(), surface_q()}; }

QuadricIntersectionModel reference_four_cover() {
    QuadricIntersectionModel m;
    const long a[4][4] = {{-1, 11, -66, 396},
                          {11, -66, 396, -2520},
                          {-66, 396, -2520, 16335},
                          {396, -2520, 16335, -105786}};
    const long b[4][4] = {{-1, -3, 33, -198},
                          {-3, 33, -198, 1188},
                          {33, -198, 1188, -7560},
                          {-198, 1188, -7560, 49005}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m.m1[i][j] = a[i][j];
            m.m2[i][j] = b[i][j];
        }
    return m;
}

std::array<LocalWitness, 4> reference_witnesses() {
    std::array<LocalWitness, 4> out;
    struct Seed {
        long p;
        int k;
        long c[4];
    };
    const Seed seeds[4] = {{2, 3, {0, 2, 1, 0}},
                           {3, 3, {12, 21, 1, 0}},
                           {11, 1, {0, 1, 0, 0}},
                           {37, 1, {0, 1, 9, 16}}};
    for (int i = 0; i < 4; ++i) {
        out[i].prime = seeds[i].p;
        out[i].precision = seeds[i].k;
        out[i].coords = {Int(seeds[i].c[0]), Int(seeds[i].c[1]), Int(seeds[i].c[2]),
                         Int(seeds[i].c[3])};
        out[i].has_lifting_data = false;
    }
    return out;
}

std::vector<Int> reference_bad_primes() { return {Int(2), Int(3), Int(11), Int(37)}; }

}  // namespace defaults
}  // namespace fourdescent
