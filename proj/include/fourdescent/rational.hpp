#ifndef FOURDESCENT_RATIONAL_HPP
#define FOURDESCENT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fourdescent {

using Int = mpz_class;
using Rat = mpq_class;

// Squarefree integer representing a class of Q*/Q*^2. Two nonzero rationals
// share a class iff their quotient is a rational square.
struct SquareClass {
    Int representative;

    bool operator==(const SquareClass&) const = default;
};

// p-adic valuation. nullopt encodes +infinity (the valuation of zero).
std::optional<long> valuation(const Int& n, const Int& p);
std::optional<long> valuation(const Rat& r, const Int& p);

// Deterministic Miller-Rabin, witness set {2,...,37} (complete below 3.3e24,
// far past anything this library touches).
bool is_prime(const Int& n);

// Factorization of |n|, n != 0: sorted (prime, exponent) pairs.
// Trial division, then Miller-Rabin plus Pollard-Brent rho on the cofactor.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// Sorted primes dividing |n|; throws std::invalid_argument on n == 0.
std::vector<Int> prime_divisors(const Int& n);

// All positive divisors of |n|, sorted. n != 0.
std::vector<Int> divisors(const Int& n);

SquareClass square_class(const Rat& r);  // r != 0

bool is_rational_square(const Rat& r);   // true for 0 as well

// Exact n-th root when it exists.
std::optional<Rat> rational_nth_root(const Rat& r, unsigned n);

// Exact square root of a perfect-square rational; throws otherwise.
Rat rational_sqrt(const Rat& r);

// max(|numerator|, |denominator|) in lowest terms.
Int height(const Rat& r);

// Accepts "n" or "n/d"; canonicalizes. Throws std::invalid_argument on junk.
Rat parse_rat(const std::string& s);

std::string rat_to_string(const Rat& r);

// Legendre symbol (a|p) for odd prime p.
int legendre_symbol(const Int& a, const Int& p);

}  // namespace fourdescent

#endif
