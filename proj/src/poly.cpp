#include "fourdescent/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fourdescent {

namespace {
const Rat kZero(0);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(const Rat& c, int degree) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rat& Poly::lc() const {
    if (c_.empty()) throw std::invalid_argument("lc: zero polynomial");
    return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& c) const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    Poly rem = *this;
    std::vector<Rat> q(std::max<int>(degree() - divisor.degree() + 1, 0), Rat(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat factor = rem.lc() / divisor.lc();
        q[shift] = factor;
        rem = rem - divisor * Poly::monomial(factor, shift);
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::monic() const { return *this * (Rat(1) / lc()); }

Poly Poly::reversed() const {
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
}

Int Poly::denominator_lcm() const {
    Int m = 1;
    for (const auto& x : c_) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x.get_den_mpz_t());
    return m;
}

Int Poly::integer_content() const {
    Int g = 0;
    for (const auto& x : c_) {
        if (x.get_den() != 1)
            throw std::invalid_argument("integer_content: polynomial not integral");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    return g;
}

Rat Poly::cauchy_root_bound() const {
    if (is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Rat m(0);
    for (size_t i = 0; i + 1 < c_.size(); ++i) m = std::max(m, Rat(abs(c_[i] / lc())));
    return 1 + m;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Rat aa = abs(a);
        if (aa != 1 || i == 0) os << rat_to_string(aa);
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Rat det(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat result(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rat factor = m[row][col] * inv;
            for (size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return result;
}

Rat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("resultant: both inputs zero");
    if (f.is_zero() || g.is_zero()) return Rat(0);
    int m = f.degree(), n = g.degree();
    if (m == 0) {
        Rat r(1);
        for (int i = 0; i < n; ++i) r *= f.lc();
        return r;
    }
    if (n == 0) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r *= g.lc();
        return r;
    }
    size_t size = m + n;
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + j] = f.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + j] = g.coeff(n - j);
    return det(std::move(s));
}

Rat discriminant(const Poly& f) {
    int n = f.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    Rat r = resultant(f, f.derivative());
    Rat sign = ((n * (n - 1) / 2) % 2 == 0) ? Rat(1) : Rat(-1);
    return sign * r / f.lc();
}

std::vector<Rat> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    Poly work = f;
    // factor out x^k
    while (work.degree() >= 1 && work.coeff(0) == 0) {
        roots.emplace_back(0);
        std::vector<Rat> v(work.coeffs().begin() + 1, work.coeffs().end());
        work = Poly(std::move(v));
    }
    if (work.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // clear denominators: candidates p/q with p | a0, q | an
    Poly zint = work * Rat(work.denominator_lcm());
    Int a0 = Int(zint.coeff(0).get_num());
    Int an = Int(zint.lc().get_num());
    for (const Int& q : divisors(an)) {
        for (const Int& p : divisors(a0)) {
            Int gg;
            mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (gg != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign * p, q);
                cand.canonicalize();
                while (work.degree() >= 1 && work(cand) == 0) {
                    roots.push_back(cand);
                    auto [quot, rem] = work.divmod(Poly({-cand, Rat(1)}));
                    work = quot;
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// does the primitive integral quartic split into two integer quadratics?
bool has_quadratic_factor(const Poly& f) {
    Int A4 = Int(f.coeff(4).get_num());
    Int A3 = Int(f.coeff(3).get_num());
    Int A2 = Int(f.coeff(2).get_num());
    Int A1 = Int(f.coeff(1).get_num());
    Int A0 = Int(f.coeff(0).get_num());
    Rat root_bound = f.cauchy_root_bound();
    // f = (a x^2 + b x + c)(d x^2 + e x + h), a d = A4, c h = A0; the first
    // factor can be taken with a > 0. |b| <= 2 a R since b = -a(r1 + r2).
    for (const Int& av : divisors(A4)) {
        Int dv = A4 / av;
        Rat bb = 2 * av * root_bound;
        Int bound = Int(bb.get_num()) / Int(bb.get_den()) + 1;
        for (const Int& cd : divisors(A0)) {
            for (int csign : {1, -1}) {
                Int cv = cd * csign;
                Int hv = A0 / cv;
                for (Int b = -bound; b <= bound; ++b) {
                    // A3 = a e + b d
                    Int num = A3 - b * dv;
                    if (num % av != 0) continue;
                    Int ev = num / av;
                    if (av * hv + b * ev + cv * dv != A2) continue;
                    if (b * hv + cv * ev != A1) continue;
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

bool is_irreducible_deg_le_4(const Poly& f) {
    int n = f.degree();
    if (n < 1 || n > 4)
        throw std::invalid_argument("is_irreducible_deg_le_4: degree out of range");
    if (n == 1) return true;
    if (!rational_roots(f).empty()) return false;
    if (n <= 3) return true;  // no rational root => no linear factor
    Poly zint = f * Rat(f.denominator_lcm());
    Int content = zint.integer_content();
    zint = zint * Rat(Int(1), content);
    return !has_quadratic_factor(zint);
}

namespace {

std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// sign variations of the chain at x (or at +/- infinity when at_inf = +/-1)
int variations(const std::vector<Poly>& chain, const Rat& x, int at_inf) {
    int var = 0, prev = 0;
    for (const Poly& p : chain) {
        int s;
        if (p.is_zero())
            s = 0;
        else if (at_inf == 0)
            s = sign_of(p(x));
        else {
            s = sign_of(p.lc());
            if (at_inf < 0 && p.degree() % 2 == 1) s = -s;
        }
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

}  // namespace

int count_real_roots(const Poly& f) {
    if (f.degree() < 1) return 0;
    auto chain = sturm_chain(f);
    return variations(chain, Rat(0), -1) - variations(chain, Rat(0), +1);
}

int count_real_roots_in(const Poly& f, const Rat& a, const Rat& b) {
    if (f.degree() < 1) return 0;
    auto chain = sturm_chain(f);
    return variations(chain, a, 0) - variations(chain, b, 0);
}

std::vector<RootInterval> isolate_real_roots(const Poly& f) {
    std::vector<RootInterval> out;
    if (f.degree() < 1) return out;
    // peel off rational roots first so interval endpoints are never roots
    Poly rest = f;
    for (const Rat& r : rational_roots(f)) {
        out.push_back({r, r, true});
        auto [q, rem] = rest.divmod(Poly({-r, Rat(1)}));
        rest = q;
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const RootInterval& a, const RootInterval& b) {
                              return a.lo == b.lo;
                          }),
              out.end());
    if (rest.degree() < 1) return out;

    auto chain = sturm_chain(rest);
    Rat bound = rest.cauchy_root_bound();
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> work{{-bound - 1, bound + 1,
                           variations(chain, -bound - 1, 0) - variations(chain, bound + 1, 0)}};
    std::vector<RootInterval> found;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            // shrink for separation from neighbors and rational roots
            Rat a = s.a, b = s.b;
            for (int i = 0; i < 40; ++i) {
                Rat mid = (a + b) / 2;
                if (rest(mid) == 0) { a = mid; b = mid; break; }
                int left = variations(chain, a, 0) - variations(chain, mid, 0);
                if (left == 1)
                    b = mid;
                else
                    a = mid;
            }
            found.push_back({a, b, a == b});
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        while (rest(mid) == 0) mid = (s.a + mid) / 2;  // avoid landing on a root
        int left = variations(chain, s.a, 0) - variations(chain, mid, 0);
        work.push_back({s.a, mid, left});
        work.push_back({mid, s.b, s.count - left});
    }
    for (auto& iv : found) out.push_back(iv);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace fourdescent
