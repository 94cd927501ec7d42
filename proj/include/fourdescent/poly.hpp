#ifndef FOURDESCENT_POLY_HPP
#define FOURDESCENT_POLY_HPP

#include <string>
#include <vector>

#include "fourdescent/rational.hpp"

namespace fourdescent {

// Univariate polynomial over Q, coefficients stored constant term first,
// always trimmed (leading coefficient nonzero unless the polynomial is zero).
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, int degree);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;         // zero outside the stored range
    const Rat& lc() const;                 // leading coefficient; poly nonzero
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& x) const;    // Horner evaluation

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const = default;

    Poly derivative() const;
    // Euclidean division by a nonzero divisor: (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly monic() const;                    // poly nonzero
    Poly reversed() const;                 // x^deg * f(1/x)

    // Smallest positive integer m with m*f integral.
    Int denominator_lcm() const;
    // Content of an integral polynomial (gcd of coefficients, positive).
    Int integer_content() const;

    // 1 + max |a_i / a_n|, an upper bound for the absolute value of any root.
    Rat cauchy_root_bound() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<Rat> c_;
    void trim();
};

// Sylvester-matrix resultant, convention Res(f,g) = lc(f)^deg(g) * prod g(alpha_i).
// Throws std::invalid_argument when both inputs are zero.
Rat resultant(const Poly& f, const Poly& g);

// (-1)^(n(n-1)/2) * Res(f, f') / lc(f); requires deg f >= 2.
Rat discriminant(const Poly& f);

// All rational roots with multiplicity, ascending.
std::vector<Rat> rational_roots(const Poly& f);

// Irreducibility over Q for 1 <= deg f <= 4: rational-root test plus a
// bounded search for integer quadratic factors.
bool is_irreducible_deg_le_4(const Poly& f);

// Number of distinct real roots (Sturm).
int count_real_roots(const Poly& f);
// Number of distinct real roots in (a, b].
int count_real_roots_in(const Poly& f, const Rat& a, const Rat& b);

// Disjoint rational intervals (a, b], each containing exactly one real root;
// rational roots of f are returned as degenerate [r, r] entries.
struct RootInterval {
    Rat lo, hi;
    bool exact;  // lo == hi == a rational root
};
std::vector<RootInterval> isolate_real_roots(const Poly& f);

// Exact determinant of a square rational matrix (Gaussian elimination).
Rat det(std::vector<std::vector<Rat>> m);

}  // namespace fourdescent

#endif
