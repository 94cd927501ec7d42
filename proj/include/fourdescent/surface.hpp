#ifndef FOURDESCENT_SURFACE_HPP
#define FOURDESCENT_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fourdescent/covering.hpp"
#include "fourdescent/localsolve.hpp"
#include "fourdescent/poly.hpp"
#include "fourdescent/rational.hpp"

namespace fourdescent {

// The quotient surface with affine model y^2 = g(t) p(x), z^2 = g(t) q(x):
// g an integral quartic with distinct roots, p and q monic positive-definite
// integer quadratics with Res(p, q) = +-1.
struct SurfaceModel {
    Poly g, p, q;
};

struct SurfacePoint {
    Rat t, x, y, z;
    bool t_at_infinity = false;
    bool x_at_infinity = false;
    bool boundary = false;  // y = z = 0 stratum (g(t) = 0)
    Int place = 0;          // 0 = global; prime p for a local point
    int precision = 0;      // local points: coordinates valid mod p^precision
};

struct ValidationItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct SurfaceValidation {
    bool ok = true;
    std::vector<ValidationItem> items;
};

SurfaceValidation validate_surface(const SurfaceModel& S);

// Sign of the square class of g(t) at a point with y z != 0; the full class
// is kept for diagnostics. For a local point the even-valuation consistency
// assertion runs first and a violation throws (it would mean a bug in the
// surface machinery, not a property of the input).
struct TwistSelector {
    int sign;                // +1 or -1
    SquareClass square_class;
};
TwistSelector twist_selector(const SurfaceModel& S, const SurfacePoint& P);

// Decomposition of a rational point through the double cover: a point with
// g(t) = s m^2 (s = +-1) lands on C x D (s = +1) or on the twisted
// C^- x D^- (s = -1). Any other square class is an obstruction and is
// reported instead (it cannot occur on genuine rational points).
struct TwistLift {
    bool ok = false;
    int twist = 0;              // +1 untwisted, -1 twisted
    Rat t, u;                   // point on C (u^2 = g(t)) or C^- (u^2 = -g(t))
    Rat x, yd, zd;              // point on D (yd^2 = p, zd^2 = q) or D^-
    SquareClass obstruction;    // set when !ok
    bool verified = false;      // curve equations re-checked exactly
};
TwistLift lift_to_twist(const SurfaceModel& S, const SurfacePoint& P);

// True iff D^-: y^2 = -p(x), z^2 = -q(x) has no real point; decided exactly
// (some x with p(x) <= 0 and q(x) <= 0 would be needed).
bool minus_twist_real_check(const SurfaceModel& S);

// Exhaustive scan over t, x of height <= H (numerator and denominator
// bounded by H in lowest terms), plus the boundary and infinity strata.
// Deterministic order: by height, then value. The _serial variant is the
// reference; the unsuffixed one may use OpenMP and must agree exactly.
std::vector<SurfacePoint> search_rational_points(const SurfaceModel& S, long H);
std::vector<SurfacePoint> search_rational_points_serial(const SurfaceModel& S, long H);

// All rationals of height <= H, ordered by (height, value). Shared by the
// search kernels and exposed for the benchmark.
std::vector<Rat> rationals_of_height_up_to(long H);

struct AdelicItem {
    std::string id;
    std::string status;  // "PASS", "FAIL", "ASSUMED"
    std::string detail;
};

struct AdelicVerdict {
    bool established = false;
    std::string verdict;  // "CONFIRMED-MODULO-ASSUMPTIONS" or "NOT-ESTABLISHED"
    std::vector<AdelicItem> items;
    std::vector<std::string> assumptions;
    std::string failing_item;  // first FAIL, when any
};

struct AdelicAssumptions {
    bool rank_zero_granted = true;
};

// Assembles the checkable hypotheses: D(Q) nonempty (rational points at
// infinity of the monic pair), the 4-covering everywhere locally soluble,
// the C(Q) = empty evidence bundle (irreducible g, trivial torsion of the
// resolvent Jacobian, no point up to height H, rank-zero assumption flag),
// and the order-4 conclusion.
AdelicVerdict adelic_verdict(const SurfaceModel& S, const QuadricIntersectionModel& fourcover,
                             const AdelicAssumptions& assumptions, long height_bound,
                             int depth_cap = 0);

}  // namespace fourdescent

#endif
