#include "fourdescent/elliptic.hpp"

#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fourdescent {

std::string ShortWeierstrassCurve::to_string() const {
    std::string s = "y^2 = x^3";
    if (A != 0) s += (A > 0 ? " + " : " - ") + rat_to_string(abs(A)) + "*x";
    if (B != 0) s += (B > 0 ? " + " : " - ") + rat_to_string(abs(B));
    return s;
}

bool on_curve(const ShortWeierstrassCurve& E, const CurvePoint& P) {
    if (P.infinity) return true;
    return P.y * P.y == P.x * P.x * P.x + E.A * P.x + E.B;
}

CurvePoint ec_neg(const CurvePoint& P) {
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, -P.y);
}

CurvePoint ec_add(const ShortWeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    if (!on_curve(E, P) || !on_curve(E, Q))
        throw std::invalid_argument("ec_add: point not on curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0) return CurvePoint::at_infinity();
        // tangent
        Rat lambda = (3 * P.x * P.x + E.A) / (2 * P.y);
        Rat x3 = lambda * lambda - 2 * P.x;
        Rat y3 = lambda * (P.x - x3) - P.y;
        return CurvePoint::affine(x3, y3);
    }
    Rat lambda = (Q.y - P.y) / (Q.x - P.x);
    Rat x3 = lambda * lambda - P.x - Q.x;
    Rat y3 = lambda * (P.x - x3) - P.y;
    return CurvePoint::affine(x3, y3);
}

CurvePoint ec_mul(const ShortWeierstrassCurve& E, long n, const CurvePoint& P) {
    if (n < 0) return ec_mul(E, -n, ec_neg(P));
    CurvePoint acc = CurvePoint::at_infinity();
    CurvePoint base = P;
    while (n > 0) {
        if (n & 1) acc = ec_add(E, acc, base);
        base = ec_add(E, base, base);
        n >>= 1;
    }
    return acc;
}

std::vector<CurvePoint> rational_two_torsion(const ShortWeierstrassCurve& E) {
    std::vector<CurvePoint> out;
    for (const Rat& r : rational_roots(E.rhs_cubic()))
        out.push_back(CurvePoint::affine(r, Rat(0)));
    return out;
}

namespace {

long mod_reduce(const Rat& r, long p) {
    Int num = r.get_num(), den = r.get_den();
    if (den % p == 0) throw std::invalid_argument("count_points_mod_p: coefficient not p-integral");
    Int pi(p);
    Int n = num % pi;
    if (n < 0) n += pi;
    Int d = den % pi;
    Int dinv;
    if (!mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pi.get_mpz_t()))
        throw std::invalid_argument("count_points_mod_p: coefficient not p-integral");
    Int v = (n * dinv) % pi;
    return v.get_si();
}

void check_good_reduction(const ShortWeierstrassCurve& E, long p) {
    if (p < 3) throw std::invalid_argument("count_points_mod_p: p must be odd");
    if (!is_prime(Int(p))) throw std::invalid_argument("count_points_mod_p: p must be prime");
    Rat d = E.disc();
    if (*valuation(Rat(6) * d, Int(p)) != 0)
        throw std::invalid_argument("count_points_mod_p: bad reduction");
}

std::vector<uint8_t> qr_table(long p) {
    // table[v] = 1 iff v is a nonzero square mod p; table[0] = 2 marker
    std::vector<uint8_t> tab(p, 0);
    tab[0] = 2;
    for (long i = 1; i <= (p - 1) / 2; ++i)
        tab[static_cast<long>((__int128)i * i % p)] = 1;
    return tab;
}

}  // namespace

long count_points_mod_p_serial(const ShortWeierstrassCurve& E, long p) {
    check_good_reduction(E, p);
    long a = mod_reduce(E.A, p), b = mod_reduce(E.B, p);
    auto tab = qr_table(p);
    long count = 1;  // infinity
    for (long x = 0; x < p; ++x) {
        long rhs = static_cast<long>(((__int128)x * x % p * x + (__int128)a * x + b) % p);
        if (tab[rhs] == 2)
            count += 1;
        else if (tab[rhs] == 1)
            count += 2;
    }
    return count;
}

long count_points_mod_p(const ShortWeierstrassCurve& E, long p) {
    check_good_reduction(E, p);
    long a = mod_reduce(E.A, p), b = mod_reduce(E.B, p);
    auto tab = qr_table(p);
    long count = 1;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
    for (long x = 0; x < p; ++x) {
        long rhs = static_cast<long>(((__int128)x * x % p * x + (__int128)a * x + b) % p);
        if (tab[rhs] == 2)
            count += 1;
        else if (tab[rhs] == 1)
            count += 2;
    }
    return count;
}

namespace {

// minimal scaling (x, y) -> (m^2 x, m^3 y) making the model integral
ShortWeierstrassCurve integral_model(const ShortWeierstrassCurve& E) {
    Int m = 1;
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), E.A.get_den_mpz_t());
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), E.B.get_den_mpz_t());
    Rat m2(m * m), m4 = m2 * m2, m6 = m4 * m2;
    return ShortWeierstrassCurve{E.A * m4, E.B * m6};
}

// order of P if it is torsion of order <= 12, else 0
long small_order(const ShortWeierstrassCurve& E, const CurvePoint& P) {
    CurvePoint acc = P;
    for (long n = 1; n <= 12; ++n) {
        if (acc.infinity) return n;
        acc = ec_add(E, acc, P);
    }
    return 0;
}

// integer roots of x^3 + A x + c, exactly, by binary search on the (at most
// three) integer-monotone segments split at +-floor(sqrt(-A/3))
std::vector<Int> integer_roots_monic_cubic(const Int& A, const Int& c) {
    auto f = [&](const Int& x) -> Int { return x * x * x + A * x + c; };
    Int bound = std::max(abs(A), abs(c)) + 2;
    std::vector<std::pair<std::pair<Int, Int>, bool>> segments;  // ([lo,hi], increasing)
    if (A >= 0) {
        segments.push_back({{-bound, bound}, true});
    } else {
        Int s;
        Int third = (-A) / 3;
        mpz_sqrt(s.get_mpz_t(), third.get_mpz_t());
        segments.push_back({{-bound, -s - 1}, true});
        segments.push_back({{-s, s}, false});
        segments.push_back({{s + 1, bound}, true});
    }
    std::vector<Int> roots;
    for (auto& [seg, inc] : segments) {
        Int lo = seg.first, hi = seg.second;
        if (lo > hi) continue;
        // least x with f(x) >= 0 (increasing) or f(x) <= 0 (decreasing)
        Int a = lo, b = hi;
        auto ok = [&](const Int& x) { return inc ? f(x) >= 0 : f(x) <= 0; };
        if (!ok(b)) continue;
        if (ok(a)) b = a;
        while (a < b) {
            Int mid, sum = a + b;
            mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
            if (ok(mid))
                b = mid;
            else
                a = mid + 1;
        }
        if (f(b) == 0) roots.push_back(b);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

TorsionCertificate torsion_trivial_certificate(const ShortWeierstrassCurve& E) {
    if (!E.nonsingular())
        throw std::invalid_argument("torsion_trivial_certificate: singular curve");
    TorsionCertificate cert;
    ShortWeierstrassCurve M = integral_model(E);

    // rational 2-torsion kills triviality immediately
    auto two = rational_two_torsion(M);
    if (!two.empty()) {
        cert.outcome = TorsionCertificate::Outcome::kNontrivial;
        cert.nontrivial_point = two.front();
        cert.nontrivial_order = 2;
        cert.detail = "rational 2-torsion point exists";
        return cert;
    }

    // route (i): gcd of #E(F_p) over the first five good primes p = 1 mod 3
    Rat d6 = Rat(6) * M.disc();
    Int gcd_acc = 0;
    for (long p = 5; cert.gcd_primes.size() < 5 && p < 100000; p += 2) {
        if (!is_prime(Int(p))) continue;
        if (p % 3 != 1) continue;
        if (*valuation(d6, Int(p)) != 0) continue;
        long n = count_points_mod_p(M, p);
        cert.gcd_primes.push_back(p);
        cert.gcd_counts.push_back(n);
        mpz_gcd(gcd_acc.get_mpz_t(), gcd_acc.get_mpz_t(), Int(n).get_mpz_t());
    }
    if (gcd_acc == 1 && cert.gcd_primes.size() >= 5) cert.via_reduction_gcd = true;

    // route (ii): Lutz-Nagell exhaustion; candidates are integral (x, y) with
    // y != 0 and y^2 | disc. Candidates of order <= 12 refute triviality.
    bool candidates_survive = false;
    Rat absd = abs(M.disc());
    Int D = absd.get_num();
    std::vector<CurvePoint> torsion_found;
    for (const Int& y : divisors(D)) {
        if (y * y > D || D % (y * y) != 0) continue;
        // integer roots x of x^3 + Ax + (B - y^2)
        Int A = M.A.get_num(), B0 = Int(M.B.get_num()) - y * y;
        for (const Int& r : integer_roots_monic_cubic(A, B0)) {
            CurvePoint P = CurvePoint::affine(Rat(r), Rat(y));
            long ord = small_order(M, P);
            if (ord > 1)
                torsion_found.push_back(P);
            else
                candidates_survive = true;  // integral point, provably non-torsion or order > 12
        }
    }
    if (!torsion_found.empty()) {
        cert.outcome = TorsionCertificate::Outcome::kNontrivial;
        cert.nontrivial_point = torsion_found.front();
        cert.nontrivial_order = small_order(M, torsion_found.front());
        cert.detail = "integral torsion point of small order";
        return cert;
    }
    if (!candidates_survive) cert.via_lutz_nagell = true;

    if (cert.via_reduction_gcd || cert.via_lutz_nagell) {
        cert.outcome = TorsionCertificate::Outcome::kTrivial;
        cert.detail = cert.via_lutz_nagell  ? "Lutz-Nagell exhaustion"
                                            : "reduction gcd";
        if (cert.via_reduction_gcd && cert.via_lutz_nagell)
            cert.detail = "Lutz-Nagell exhaustion + reduction gcd";
    } else {
        cert.outcome = TorsionCertificate::Outcome::kInconclusive;
        cert.detail = "both certification routes failed";
    }
    return cert;
}

bool curves_isomorphic_over_Q(const ShortWeierstrassCurve& E1,
                              const ShortWeierstrassCurve& E2) {
    if (!E1.nonsingular() || !E2.nonsingular())
        throw std::invalid_argument("curves_isomorphic_over_Q: singular input");
    if ((E1.A == 0) != (E2.A == 0)) return false;
    if ((E1.B == 0) != (E2.B == 0)) return false;
    if (E1.A == 0) {
        // j = 0: need B2/B1 a rational sixth power
        return rational_nth_root(E2.B / E1.B, 6).has_value();
    }
    if (E1.B == 0) {
        // j = 1728: need A2/A1 a rational fourth power
        return rational_nth_root(E2.A / E1.A, 4).has_value();
    }
    // t^4 = A2/A1 and t^6 = B2/B1 force s = t^2 = (B2/B1)/(A2/A1)
    Rat ra = E2.A / E1.A, rb = E2.B / E1.B;
    Rat s = rb / ra;
    return is_rational_square(s) && s * s == ra && s * s * s == rb;
}

}  // namespace fourdescent
