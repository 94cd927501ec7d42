#ifndef FOURDESCENT_QUARTIC_ALGEBRA_HPP
#define FOURDESCENT_QUARTIC_ALGEBRA_HPP

#include <array>

#include "fourdescent/poly.hpp"
#include "fourdescent/rational.hpp"

namespace fourdescent {

// The quotient algebra Q[theta]/(m) for a monic degree-4 modulus m with
// nonzero discriminant. The defining quartic may be non-monic; we divide by
// its leading coefficient (the quotient algebras coincide, norms unaffected).
// Reducible moduli are allowed (etale, non-field) and flagged.
struct QuarticAlgebra {
    Poly modulus;          // monic, degree 4
    Rat original_leading;  // leading coefficient of the defining quartic
    bool reducible;        // modulus factors over Q

    // from the quartic a x^4 + c x^2 + d x + e given by its full coefficient
    // vector (constant first); throws on degree != 4 or repeated roots
    static QuarticAlgebra from_quartic(const Poly& quartic);

    bool operator==(const QuarticAlgebra& o) const {
        return modulus == o.modulus;
    }
};

struct AlgebraElement {
    std::array<Rat, 4> coord;  // c0 + c1 theta + c2 theta^2 + c3 theta^3
    const QuarticAlgebra* algebra = nullptr;

    static AlgebraElement make(const QuarticAlgebra& alg, std::array<Rat, 4> c);
    static AlgebraElement scalar(const QuarticAlgebra& alg, const Rat& c);
    static AlgebraElement theta(const QuarticAlgebra& alg);

    bool operator==(const AlgebraElement& o) const { return coord == o.coord; }
};

// Product reduced modulo the monic modulus. Throws on mismatched algebras.
AlgebraElement nf_mul(const AlgebraElement& u, const AlgebraElement& v);

// Determinant of the multiplication-by-u matrix in basis (1, theta, theta^2,
// theta^3). Multiplicative.
Rat nf_norm(const AlgebraElement& u);

// The admissibility condition for the covering construction:
// N(eps)/a is a nonzero rational square.
bool epsilon_admissible(const AlgebraElement& eps, const Rat& a);

}  // namespace fourdescent

#endif
