#ifndef FOURDESCENT_COVERING_HPP
#define FOURDESCENT_COVERING_HPP

#include <array>
#include <utility>

#include "fourdescent/elliptic.hpp"
#include "fourdescent/poly.hpp"
#include "fourdescent/quartic_algebra.hpp"
#include "fourdescent/rational.hpp"

namespace fourdescent {

using Mat4Q = std::array<std::array<Rat, 4>, 4>;
using Mat4Z = std::array<std::array<Int, 4>, 4>;

// Genus-1 double cover y^2 = a x^4 + c x^2 + d x + e (no cubic term).
struct QuarticCurveModel {
    Rat a, c, d, e;

    Poly quartic() const { return Poly({e, d, c, Rat(0), a}); }
    Poly monic_part() const { return quartic().monic(); }
    bool smooth() const { return a != 0 && discriminant(quartic()) != 0; }
};

// Exact rational Gram matrices of a pair of quadrics in P^3.
struct QuadricPair {
    Mat4Q first, second;
};

// Two primitive integer symmetric matrices cutting out a smooth intersection
// of quadrics in P^3 (the 4-covering model).
struct QuadricIntersectionModel {
    Mat4Z m1, m2;

    // Clears denominators per matrix, divides out content, and fixes the sign
    // so the (1,1) entry (or the first nonzero diagonal entry) is negative.
    static QuadricIntersectionModel from_rational(const QuadricPair& pair);
};

// Homogeneous quartic form in (lambda, mu); coeff[i] multiplies
// lambda^(4-i) mu^i.
struct BinaryQuarticForm {
    std::array<Rat, 5> coeff;

    bool operator==(const BinaryQuarticForm& o) const = default;
    Poly dehomogenized() const;  // F(x, 1) as a polynomial in x
};

// The Jacobian E: u^2 = v^3 - 27 I v - 27 J with I = 12ae + c^2,
// J = 72ace - 27ad^2 - 2c^3. Throws on a singular result.
ShortWeierstrassCurve resolvent_jacobian(const QuarticCurveModel& C);

// The intersection-of-quadrics model of C in coordinates (u, t, x, y):
// Q = ut - x^2, Q' = -y^2 + au^2 + cut + dxt + et^2. The first Gram matrix
// has rank 3.
QuadricPair two_covering_quadrics(const QuarticCurveModel& C);

// Expands eps*(x1 + x2 th + x3 th^2 + x4 th^3)^2 over Q[th]/(monic part of C)
// and extracts the theta^2 and theta^3 coefficient forms as integral
// matrices. Requires epsilon_admissible(eps, a); throws otherwise, and throws
// on a degenerate pencil.
QuadricIntersectionModel build_four_covering(const QuarticCurveModel& C,
                                             const AlgebraElement& eps);

// det(lambda M1 + mu M2), exact.
BinaryQuarticForm pencil_determinant(const QuadricPair& pair);
BinaryQuarticForm pencil_determinant(const QuadricIntersectionModel& model);

// Invariants of weight 4 and 6: I = 12ae - 3bd + c^2,
// J = 72ace + 9bcd - 27ad^2 - 27b^2 e - 2c^3. At b = 0 they restrict to the
// resolvent formulas above.
std::pair<Rat, Rat> binary_quartic_invariants(const BinaryQuarticForm& F);

// The Q-span of {a.m1, a.m2} equals that of {b.m1, b.m2}.
bool same_pencil_span(const QuadricIntersectionModel& a,
                      const QuadricIntersectionModel& b);

Int quadric_form_value(const Mat4Z& m, const std::array<Int, 4>& v);
std::array<Int, 4> quadric_gradient(const Mat4Z& m, const std::array<Int, 4>& v);

}  // namespace fourdescent

#endif
