#ifndef FOURDESCENT_DEFAULTS_HPP
#define FOURDESCENT_DEFAULTS_HPP

#include <array>

#include "fourdescent/covering.hpp"
#include "fourdescent/elliptic.hpp"
#include "fourdescent/localsolve.hpp"
#include "fourdescent/quartic_algebra.hpp"
#include "fourdescent/surface.hpp"

namespace fourdescent {
namespace defaults {

// The built-in instance: the double cover y^2 = 3(t^4 - 54 t^2 - 117 t - 243)
// of y^2 = x^3 - 1221, the norm-243 epsilon, and the smallest valid
// positive-definite pair (x^2 + 1, x^2 + 2).
QuarticCurveModel quartic();                 // (a, c, d, e) = (3, -162, -351, -729)
std::array<Rat, 4> epsilon_coords();         // 27 + 29 th - th^2 - th^3/3
ShortWeierstrassCurve jacobian();            // y^2 = x^3 - 1221
Poly surface_p();                            // x^2 + 1
Poly surface_q();                            // x^2 + 2
SurfaceModel surface();

// Known-good 4-covering matrices for the default instance, used as the
// cross-check target for the constructed pencil.
QuadricIntersectionModel reference_four_cover();

// The four reference local seeds for the default 4-covering:
// (0,2,1,0) mod 2^3, (12,21,1,0) mod 3^3, (0,1,0,0) mod 11, (0,1,9,16) mod 37.
std::array<LocalWitness, 4> reference_witnesses();

std::vector<Int> reference_bad_primes();     // {2, 3, 11, 37}

}  // namespace defaults
}  // namespace fourdescent

#endif
