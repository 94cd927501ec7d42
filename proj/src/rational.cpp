#include "fourdescent/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace fourdescent {

namespace {

const long kTrialBound = 100000;

Int mul_mod(const Int& a, const Int& b, const Int& m) {
    Int r = a * b;
    r %= m;
    return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

// Pollard-Brent rho with deterministic parameter sweep. n odd composite, not
// a prime power handled upstream; returns a nontrivial factor.
Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x;
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                saved_x = x;
                power *= 2;
                lam = 0;
            }
            x = (x * x + c) % n;
            ++lam;
            Int diff = x - saved_x;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out);

void split_composite(const Int& n, std::vector<std::pair<Int, int>>& out) {
    Int f = pollard_brent(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    // perfect power?
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::vector<std::pair<Int, int>> base;
                factor_into(root, base);
                for (auto& [p, e] : base) out.emplace_back(p, e * static_cast<int>(k));
                return;
            }
        }
    }
    split_composite(n, out);
}

}  // namespace

std::optional<long> valuation(const Int& n, const Int& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    if (n == 0) return std::nullopt;
    Int reduced, a = abs(n);
    auto v = mpz_remove(reduced.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return static_cast<long>(v);
}

std::optional<long> valuation(const Rat& r, const Int& p) {
    if (r == 0) {
        if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
        return std::nullopt;
    }
    return *valuation(Int(r.get_num()), p) - *valuation(Int(r.get_den()), p);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (int a : small)
        if (miller_rabin_witness(n, a, d, s)) return false;
    return true;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    Int m = abs(n);
    std::vector<std::pair<Int, int>> out;
    for (long p = 2; p <= kTrialBound && m > 1; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        Int pp = Int(p) * p;
        if (pp > m) break;
    }
    if (m > 1) factor_into(m, out);
    std::sort(out.begin(), out.end());
    // merge duplicates from the recursive splits
    std::vector<std::pair<Int, int>> merged;
    for (auto& [p, e] : out) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.emplace_back(p, e);
    }
    return merged;
}

std::vector<Int> prime_divisors(const Int& n) {
    if (n == 0) throw std::invalid_argument("prime_divisors: n must be nonzero");
    std::vector<Int> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factorize(n);
    std::vector<Int> out{1};
    for (auto& [p, e] : fac) {
        size_t base = out.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SquareClass square_class(const Rat& r) {
    if (r == 0) throw std::invalid_argument("square_class: r must be nonzero");
    // r = num/den ~ num*den modulo squares
    Int m = Int(r.get_num()) * Int(r.get_den());
    Int rep = (m < 0) ? -1 : 1;
    for (auto& [p, e] : factorize(m))
        if (e % 2 != 0) rep *= p;
    return SquareClass{rep};
}

bool is_rational_square(const Rat& r) {
    if (r == 0) return true;
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num_mpz_t()) &&
           mpz_perfect_square_p(r.get_den_mpz_t());
}

std::optional<Rat> rational_nth_root(const Rat& r, unsigned n) {
    if (n == 0) throw std::invalid_argument("rational_nth_root: n must be positive");
    if (r == 0) return Rat(0);
    if (r < 0 && n % 2 == 0) return std::nullopt;
    Int num = abs(Int(r.get_num())), den = r.get_den();
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
    Rat root(rn, rd);
    root.canonicalize();
    if (r < 0) root = -root;
    return root;
}

Rat rational_sqrt(const Rat& r) {
    auto root = rational_nth_root(r, 2);
    if (!root) throw std::invalid_argument("rational_sqrt: not a perfect square");
    return *root;
}

Int height(const Rat& r) {
    Int num = abs(Int(r.get_num()));
    Int den = r.get_den();
    return std::max(num, den);
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int legendre_symbol(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

}  // namespace fourdescent
