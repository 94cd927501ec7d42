#ifndef FOURDESCENT_ELLIPTIC_HPP
#define FOURDESCENT_ELLIPTIC_HPP

#include <string>
#include <vector>

#include "fourdescent/poly.hpp"
#include "fourdescent/rational.hpp"

namespace fourdescent {

// y^2 = x^3 + A x + B, nonsingular (4A^3 + 27B^2 != 0)
struct ShortWeierstrassCurve {
    Rat A, B;

    Rat disc() const { return -16 * (4 * A * A * A + 27 * B * B); }
    bool nonsingular() const { return disc() != 0; }
    Poly rhs_cubic() const { return Poly({B, A, Rat(0), Rat(1)}); }
    std::string to_string() const;
};

struct CurvePoint {
    bool infinity = true;
    Rat x, y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(Rat px, Rat py) { return CurvePoint{false, std::move(px), std::move(py)}; }
    bool operator==(const CurvePoint& o) const {
        if (infinity != o.infinity) return false;
        return infinity || (x == o.x && y == o.y);
    }
};

bool on_curve(const ShortWeierstrassCurve& E, const CurvePoint& P);

// Group law with the point at infinity as identity. Throws when an input
// point does not lie on E.
CurvePoint ec_add(const ShortWeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint ec_neg(const CurvePoint& P);
CurvePoint ec_mul(const ShortWeierstrassCurve& E, long n, const CurvePoint& P);

// Points (r, 0) for the rational roots r of x^3 + Ax + B.
std::vector<CurvePoint> rational_two_torsion(const ShortWeierstrassCurve& E);

// #E(F_p) by direct enumeration (quadratic-residue table, O(p) memory).
// Requires odd p with good reduction: p does not divide 6*disc and A, B are
// p-integral. The _serial variant is the reference implementation; the
// unsuffixed one uses OpenMP when available and must agree exactly.
long count_points_mod_p(const ShortWeierstrassCurve& E, long p);
long count_points_mod_p_serial(const ShortWeierstrassCurve& E, long p);

struct TorsionCertificate {
    enum class Outcome { kTrivial, kNontrivial, kInconclusive };
    Outcome outcome = Outcome::kInconclusive;
    bool via_reduction_gcd = false;   // gcd of #E(F_p) over good primes is 1
    bool via_lutz_nagell = false;     // no 2-torsion, no integral candidate survives
    std::vector<long> gcd_primes;
    std::vector<long> gcd_counts;
    CurvePoint nontrivial_point;      // set when outcome == kNontrivial
    long nontrivial_order = 0;        // 0 when the point is 2-torsion evidence
    std::string detail;
};

// Certifies E(Q)_tors = {O} (or exhibits a nontrivial torsion point).
// Route (i): gcd of #E(F_p) over the first five good primes p = 1 mod 3
// (the congruence keeps supersingular counts out on j = 0 curves).
// Route (ii): Lutz-Nagell exhaustion on the cleared-denominator model.
// Never claims triviality when a rational 2-torsion point exists.
TorsionCertificate torsion_trivial_certificate(const ShortWeierstrassCurve& E);

// True iff E2: A2 = t^4 A1, B2 = t^6 B1 for some rational t != 0.
bool curves_isomorphic_over_Q(const ShortWeierstrassCurve& E1,
                              const ShortWeierstrassCurve& E2);

}  // namespace fourdescent

#endif
