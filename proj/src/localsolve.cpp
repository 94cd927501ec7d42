#include "fourdescent/localsolve.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fourdescent {

namespace {

Int pow_int(const Int& p, int k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

long val_int(const Int& n, const Int& p) {
    if (n == 0) return -1;  // callers treat -1 as "infinite"
    Int reduced, a = abs(n);
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

// z^2 = u soluble with u a p-adic unit, decided from the unit residue
bool unit_is_square(const Int& u, const Int& p) {
    if (p == 2) return u % 8 == 1 || u % 8 == -7;
    return legendre_symbol(u, p) == 1;
}

// ---------------------------------------------------------------------------
// quartic residue tree
// ---------------------------------------------------------------------------

struct QuarticTreeStats {
    long nodes = 0;
    int max_depth = 0;
};

// integral polynomial evaluation
Int eval_int(const std::vector<Int>& co, const Int& x) {
    Int acc = 0;
    for (auto it = co.rbegin(); it != co.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Does y^2 = g(x) have a solution with x = x0 (mod p^k), x in Z_p?
// g(x0 + p^k t) = g(x0) + p^k(...), so with v = val(g(x0)):
//   - g(x0) an exact p-adic square (v even, square unit) -> soluble at x0;
//   - v locked for the whole branch (v <= k-1 odd p, v <= k-3 at p = 2)
//     with the square test failed -> branch dead;
//   - otherwise split into the p children mod p^(k+1).
bool quartic_branch(const std::vector<Int>& co, const Int& x0, int k,
                    const Int& p, int kmax, QuarticTreeStats& stats,
                    Int& witness_x, int& witness_k) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, k);
    Int v = eval_int(co, x0);
    if (v == 0) {
        witness_x = x0;
        witness_k = k;
        return true;
    }
    long val = val_int(v, p);
    Int unit = v / pow_int(p, static_cast<int>(val));
    if (val % 2 == 0 && unit_is_square(unit, p)) {
        witness_x = x0;
        witness_k = k;
        return true;
    }
    long locked = (p == 2) ? k - 3 : k - 1;
    if (val <= locked) return false;
    if (k >= kmax)
        throw ResourceLimitError("quartic residue tree: depth bound " +
                                 std::to_string(kmax) + " exceeded at x = " +
                                 x0.get_str() + " (p = " + p.get_str() + ")");
    Int pk = pow_int(p, k);
    for (Int j = 0; j < p; ++j)
        if (quartic_branch(co, x0 + j * pk, k + 1, p, kmax, stats, witness_x, witness_k))
            return true;
    return false;
}

// integral coefficient vector of m^2 * g for the least m clearing denominators
std::vector<Int> integral_rhs(const Poly& g) {
    Int m = g.denominator_lcm();
    Rat scale(m * m);
    std::vector<Int> co;
    for (int i = 0; i <= g.degree(); ++i) {
        Rat c = g.coeff(i) * scale;
        co.push_back(Int(c.get_num()));
    }
    while (co.size() < 5) co.emplace_back(0);
    return co;
}

int quartic_depth_bound(const QuarticCurveModel& C, const Int& p, int depth_cap) {
    if (depth_cap > 0) return depth_cap;
    Rat ld = C.a * discriminant(C.quartic());
    Int num = ld.get_num(), den = ld.get_den();
    long v = val_int(num, p) + val_int(den, p);
    int k = static_cast<int>(2 * v + 3);
    if (p == 2) k += 2;
    return k;
}

// ---------------------------------------------------------------------------
// quadric intersection residue tree
// ---------------------------------------------------------------------------

struct QINode {
    std::array<Int, 4> v;
};

bool lex_less(const std::array<Int, 4>& a, const std::array<Int, 4>& b) {
    for (int i = 0; i < 4; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// smallest valuation over the six 2x2 minors of the 2x4 Jacobian, with the
// column pair attaining it
struct MinorInfo {
    long val;  // -1 encodes all minors zero
    int col_a, col_b;
};

MinorInfo best_minor(const QuadricIntersectionModel& QI, const std::array<Int, 4>& v,
                     const Int& p) {
    auto g1 = quadric_gradient(QI.m1, v);
    auto g2 = quadric_gradient(QI.m2, v);
    MinorInfo best{-1, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Int d = g1[i] * g2[j] - g1[j] * g2[i];
            if (d == 0) continue;
            long t = val_int(d, p);
            if (best.val < 0 || t < best.val) best = {t, i, j};
        }
    return best;
}

bool node_liftable(const QuadricIntersectionModel& QI, const std::array<Int, 4>& v, int k,
                   const Int& p, MinorInfo& info) {
    info = best_minor(QI, v, p);
    return info.val >= 0 && k >= 2 * info.val + 1;
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

// children of a node mod p^k: x = v + p^k d with grad(Q_i) . d = -Q_i(v)/p^k
// (mod p); the linear system is put in echelon form and only its solution set
// enumerated, deduplicated modulo the projective direction v mod p.
std::vector<std::array<Int, 4>> qi_children(const QuadricIntersectionModel& QI,
                                            const std::array<Int, 4>& v, int k,
                                            const Int& p) {
    Int pk = pow_int(p, k);
    long pl = p.get_si();
    Int q1 = quadric_form_value(QI.m1, v);
    Int q2 = quadric_form_value(QI.m2, v);
    auto g1 = quadric_gradient(QI.m1, v);
    auto g2 = quadric_gradient(QI.m2, v);
    // rows [a | r] of the 2x5 augmented system over F_p
    long rows[2][5];
    for (int i = 0; i < 4; ++i) {
        rows[0][i] = Int(((g1[i] % p) + p) % p).get_si();
        rows[1][i] = Int(((g2[i] % p) + p) % p).get_si();
    }
    rows[0][4] = Int(((-q1 / pk) % p + p) % p).get_si();
    rows[1][4] = Int(((-q2 / pk) % p + p) % p).get_si();

    int pivot_col[2] = {-1, -1};
    int rank = 0;
    for (int col = 0; col < 4 && rank < 2; ++col) {
        int pr = -1;
        for (int r = rank; r < 2; ++r)
            if (rows[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int j = 0; j < 5; ++j) std::swap(rows[rank][j], rows[pr][j]);
        long inv = inv_mod(rows[rank][col], pl);
        for (int j = 0; j < 5; ++j) rows[rank][j] = rows[rank][j] * inv % pl;
        for (int r = 0; r < 2; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            long f = rows[r][col];
            for (int j = 0; j < 5; ++j)
                rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % pl + pl) % pl;
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < 2; ++r)
        if (rows[r][4] != 0) return {};  // inconsistent: branch dies

    std::array<long, 4> dir;
    for (int i = 0; i < 4; ++i) dir[i] = Int(((v[i] % p) + p) % p).get_si();
    int dir_pivot = -1;
    for (int i = 0; i < 4; ++i)
        if (dir[i] != 0) { dir_pivot = i; break; }
    long dir_inv = dir_pivot >= 0 ? inv_mod(dir[dir_pivot], pl) : 0;

    std::vector<int> free_cols;
    for (int i = 0; i < 4; ++i)
        if (i != pivot_col[0] && i != pivot_col[1]) free_cols.push_back(i);

    std::set<std::array<long, 4>> seen;
    std::vector<std::array<Int, 4>> out;
    long total = 1;
    for (size_t i = 0; i < free_cols.size(); ++i) total *= pl;
    for (long idx = 0; idx < total; ++idx) {
        std::array<long, 4> d{};
        long rest = idx;
        for (int fc : free_cols) {
            d[fc] = rest % pl;
            rest /= pl;
        }
        for (int r = 0; r < rank; ++r) {
            long acc = rows[r][4];
            for (int fc : free_cols) acc = ((acc - rows[r][fc] * d[fc]) % pl + pl) % pl;
            d[pivot_col[r]] = acc;
        }
        // canonicalize modulo the line F_p * dir
        if (dir_pivot >= 0 && d[dir_pivot] != 0) {
            long f = d[dir_pivot] * dir_inv % pl;
            for (int i = 0; i < 4; ++i) d[i] = ((d[i] - f * dir[i]) % pl + pl) % pl;
        }
        if (!seen.insert(d).second) continue;
        std::array<Int, 4> child;
        for (int i = 0; i < 4; ++i) child[i] = v[i] + pk * d[i];
        out.push_back(child);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<std::array<Int, 4>> qi_level_one(const QuadricIntersectionModel& QI,
                                             const Int& p) {
    long pl = p.get_si();
    std::vector<std::array<Int, 4>> out;
    // projective representatives, first nonzero coordinate normalized to 1,
    // enumerated in lexicographic order
    std::array<long, 4> v{};
    for (v[0] = 0; v[0] < 2; ++v[0])
        for (v[1] = 0; v[1] < (v[0] ? pl : 2); ++v[1])
            for (v[2] = 0; v[2] < ((v[0] || v[1]) ? pl : 2); ++v[2])
                for (v[3] = 0; v[3] < ((v[0] || v[1] || v[2]) ? pl : 2); ++v[3]) {
                    int nz = -1;
                    for (int i = 0; i < 4; ++i)
                        if (v[i] != 0) { nz = i; break; }
                    if (nz < 0 || v[nz] != 1) continue;
                    std::array<Int, 4> vi;
                    for (int i = 0; i < 4; ++i) vi[i] = v[i];
                    if (quadric_form_value(QI.m1, vi) % p == 0 &&
                        quadric_form_value(QI.m2, vi) % p == 0)
                        out.push_back(vi);
                }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// discriminant of a binary quartic through its invariants, robust when the
// lambda^4 coefficient vanishes: 27 disc = 4 I^3 - J^2
Rat binary_disc(const BinaryQuarticForm& F) {
    auto [I, J] = binary_quartic_invariants(F);
    return (4 * I * I * I - J * J) / 27;
}

// integral form with content divided out, plus the content itself
std::pair<BinaryQuarticForm, Int> primitive_form(const BinaryQuarticForm& F) {
    Int lcm = 1;
    for (const auto& c : F.coeff)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    Int content = 0;
    BinaryQuarticForm out;
    for (int i = 0; i < 5; ++i) {
        Rat v = F.coeff[i] * Rat(lcm);
        out.coeff[i] = v;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
    }
    if (content == 0) throw std::invalid_argument("primitive_form: zero form");
    for (int i = 0; i < 5; ++i) out.coeff[i] /= Rat(content);
    return {out, content};
}

int qi_depth_bound(const QuadricIntersectionModel& QI, const Int& p, int depth_cap) {
    if (depth_cap > 0) return depth_cap;
    auto [fprim, content] = primitive_form(pencil_determinant(QI));
    Rat d = binary_disc(fprim);
    if (d == 0) throw std::invalid_argument("residue tree: degenerate pencil");
    long v = val_int(Int(d.get_num()), p);
    int k = static_cast<int>(2 * v + 3);
    if (p == 2) k += 2;
    return k;
}

const size_t kFrontierCap = 2000000;

}  // namespace

SolubilityVerdict quartic_locally_soluble(const QuarticCurveModel& C, const Int& p,
                                          int depth_cap) {
    if (!C.smooth()) throw std::invalid_argument("quartic_locally_soluble: singular model");
    if (!is_prime(p)) throw std::invalid_argument("quartic_locally_soluble: p not prime");
    int kmax = quartic_depth_bound(C, p, depth_cap);
    QuarticTreeStats stats;
    SolubilityVerdict out;
    out.place = p;

    std::vector<Int> direct = integral_rhs(C.quartic());
    std::vector<Int> reciprocal(direct.rbegin(), direct.rend());
    const char* names[2] = {"direct", "reciprocal"};
    const std::vector<Int>* models[2] = {&direct, &reciprocal};
    for (int m = 0; m < 2; ++m) {
        Int wx;
        int wk = 0;
        bool found = false;
        for (Int j = 0; j < p && !found; ++j)
            found = quartic_branch(*models[m], j, 1, p, kmax, stats, wx, wk);
        if (found) {
            out.status = Solubility::kSoluble;
            out.certificate = CertificateKind::kLiftingWitness;
            LocalWitness w;
            w.prime = p;
            w.precision = wk;
            w.coords = {wx};
            out.witness = w;
            out.detail = std::string(names[m]) + " chart, x = " + wx.get_str() +
                         " mod " + p.get_str() + "^" + std::to_string(wk);
            return out;
        }
    }
    out.status = Solubility::kInsoluble;
    out.certificate = CertificateKind::kExhaustedResidueTree;
    std::ostringstream os;
    os << "both charts exhausted: " << stats.nodes << " nodes, max depth "
       << stats.max_depth << " (bound " << kmax << ")";
    out.detail = os.str();
    return out;
}

SolubilityVerdict quadric_intersection_locally_soluble(const QuadricIntersectionModel& QI,
                                                       const Int& p, int depth_cap) {
    if (!is_prime(p))
        throw std::invalid_argument("quadric_intersection_locally_soluble: p not prime");
    int kmax = qi_depth_bound(QI, p, depth_cap);
    SolubilityVerdict out;
    out.place = p;

    std::vector<std::array<Int, 4>> level = qi_level_one(QI, p);
    long nodes = static_cast<long>(level.size());
    for (int k = 1; k <= kmax; ++k) {
        // scan the whole level: the lexicographically least liftable node at
        // the shallowest liftable depth is the reported witness
        for (const auto& v : level) {
            MinorInfo info;
            if (node_liftable(QI, v, k, p, info)) {
                out.status = Solubility::kSoluble;
                out.certificate = CertificateKind::kLiftingWitness;
                LocalWitness w;
                w.prime = p;
                w.precision = k;
                w.coords = {v[0], v[1], v[2], v[3]};
                w.has_lifting_data = true;
                w.minor_col_a = info.col_a;
                w.minor_col_b = info.col_b;
                w.minor_valuation = static_cast<int>(info.val);
                out.witness = w;
                out.detail = "liftable at depth " + std::to_string(k);
                return out;
            }
        }
        if (level.empty()) break;
        if (k == kmax)
            throw ResourceLimitError(
                "quadric residue tree: depth bound " + std::to_string(kmax) +
                " exceeded with " + std::to_string(level.size()) +
                " live branches (p = " + p.get_str() + ")");
        std::vector<std::array<Int, 4>> next;
        for (const auto& v : level) {
            auto ch = qi_children(QI, v, k, p);
            next.insert(next.end(), ch.begin(), ch.end());
            if (next.size() > kFrontierCap)
                throw ResourceLimitError("quadric residue tree: frontier cap exceeded");
        }
        std::sort(next.begin(), next.end(), lex_less);
        nodes += static_cast<long>(next.size());
        level = std::move(next);
    }
    out.status = Solubility::kInsoluble;
    out.certificate = CertificateKind::kExhaustedResidueTree;
    out.detail = "residue tree exhausted after " + std::to_string(nodes) +
                 " nodes (bound " + std::to_string(kmax) + ")";
    return out;
}

bool verify_witness(const QuadricIntersectionModel& QI, const LocalWitness& w) {
    if (w.prime < 2 || !is_prime(w.prime) || w.precision < 1 || w.coords.size() != 4)
        return false;
    Int pk = pow_int(w.prime, w.precision);
    std::array<Int, 4> v{w.coords[0], w.coords[1], w.coords[2], w.coords[3]};
    bool primitive = false;
    for (const auto& x : v)
        if (x % w.prime != 0) primitive = true;
    if (!primitive) return false;
    if (quadric_form_value(QI.m1, v) % pk != 0) return false;
    if (quadric_form_value(QI.m2, v) % pk != 0) return false;

    if (w.has_lifting_data) {
        auto g1 = quadric_gradient(QI.m1, v);
        auto g2 = quadric_gradient(QI.m2, v);
        int i = w.minor_col_a, j = w.minor_col_b;
        if (i < 0 || j < 0 || i > 3 || j > 3 || i == j) return false;
        Int d = g1[i] * g2[j] - g1[j] * g2[i];
        if (d == 0) return false;
        long t = val_int(d, w.prime);
        return t <= w.minor_valuation && w.precision >= 2 * t + 1;
    }

    // bare seed: liftable already, or extends branch-by-branch to a liftable node
    MinorInfo info;
    if (node_liftable(QI, v, w.precision, w.prime, info)) return true;
    int kmax = qi_depth_bound(QI, w.prime, 0);
    std::vector<std::array<Int, 4>> level{v};
    for (int k = w.precision; k <= kmax; ++k) {
        for (const auto& node : level)
            if (node_liftable(QI, node, k, w.prime, info)) return true;
        if (level.empty() || k == kmax) break;
        std::vector<std::array<Int, 4>> next;
        for (const auto& node : level) {
            auto ch = qi_children(QI, node, k, w.prime);
            next.insert(next.end(), ch.begin(), ch.end());
            if (next.size() > kFrontierCap) return false;
        }
        level = std::move(next);
    }
    return false;
}

// ---------------------------------------------------------------------------
// real place
// ---------------------------------------------------------------------------

SolubilityVerdict real_soluble_quartic(const QuarticCurveModel& C) {
    SolubilityVerdict out;
    out.place = 0;
    Poly g = C.quartic();
    if (C.a > 0) {
        out.status = Solubility::kSoluble;
        out.certificate = CertificateKind::kSignAnalysis;
        // concrete nonnegative value for the record
        Rat bound = g.cauchy_root_bound();
        Int m = Int(bound.get_num()) / Int(bound.get_den()) + 1;
        out.detail = "leading coefficient positive; g(" + m.get_str() +
                     ") = " + rat_to_string(g(Rat(m))) + " > 0";
        return out;
    }
    if (count_real_roots(g) > 0) {
        out.status = Solubility::kSoluble;
        out.certificate = CertificateKind::kSignAnalysis;
        out.detail = "g has a real root (Sturm), so g attains 0";
        return out;
    }
    // a < 0 with no real root: g < 0 everywhere
    out.status = Solubility::kInsoluble;
    out.certificate = CertificateKind::kDefiniteForm;
    out.detail = "negative leading coefficient and no real root: g < 0 on R";
    return out;
}

namespace {

bool positive_definite(const Mat4Q& m) {
    // Sylvester: all four leading principal minors positive
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<Rat>> sub(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sub[i][j] = m[i][j];
        if (det(std::move(sub)) <= 0) return false;
    }
    return true;
}

Mat4Q pencil_member(const QuadricIntersectionModel& QI, const Rat& lam, const Rat& mu) {
    Mat4Q m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i][j] = lam * Rat(QI.m1[i][j]) + mu * Rat(QI.m2[i][j]);
    return m;
}

bool member_definite(const Mat4Q& m) {
    Mat4Q neg;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) neg[i][j] = -m[i][j];
    return positive_definite(m) || positive_definite(neg);
}

struct NewtonResult {
    bool ok = false;
    std::array<double, 4> x{};
    double residual = 0.0;
    double min_sv = 0.0;
};

double dform(const std::array<std::array<double, 4>, 4>& m, const std::array<double, 4>& v) {
    double acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += m[i][j] * v[i] * v[j];
    return acc;
}

// smallest singular value of a 2x4 matrix via the 2x2 Gram matrix
double min_singular_value(const std::array<std::array<double, 4>, 4>& A,
                          const std::array<std::array<double, 4>, 4>& B,
                          const std::array<double, 4>& v) {
    std::array<double, 4> r1{}, r2{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            r1[i] += 2 * A[i][j] * v[j];
            r2[i] += 2 * B[i][j] * v[j];
        }
    double a = 0, b = 0, c = 0;
    for (int i = 0; i < 4; ++i) {
        a += r1[i] * r1[i];
        b += r1[i] * r2[i];
        c += r2[i] * r2[i];
    }
    double tr = a + c, dt = a * c - b * b;
    double disc = std::sqrt(std::max(tr * tr / 4 - dt, 0.0));
    double lam_min = tr / 2 - disc;
    return std::sqrt(std::max(lam_min, 0.0));
}

NewtonResult newton_search(const QuadricIntersectionModel& QI) {
    std::array<std::array<double, 4>, 4> A, B;
    double scale_a = 0, scale_b = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            A[i][j] = QI.m1[i][j].get_d();
            B[i][j] = QI.m2[i][j].get_d();
            scale_a = std::max(scale_a, std::fabs(A[i][j]));
            scale_b = std::max(scale_b, std::fabs(B[i][j]));
        }
    // normalize the forms so the residual threshold is scale-free
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            A[i][j] /= scale_a;
            B[i][j] /= scale_b;
        }
    NewtonResult best;
    const double grid[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int fi = 0; fi < 4; ++fi)
        for (int fj = fi + 1; fj < 4; ++fj) {
            int free_a = -1, free_b = -1;
            for (int i = 0; i < 4; ++i)
                if (i != fi && i != fj) (free_a < 0 ? free_a : free_b) = i;
            for (double gi : grid)
                for (double gj : grid) {
                    std::array<double, 4> v{};
                    v[fi] = gi;
                    v[fj] = gj;
                    v[free_a] = 1.0;
                    v[free_b] = 0.3;
                    for (int it = 0; it < 60; ++it) {
                        double f1 = dform(A, v), f2 = dform(B, v);
                        std::array<double, 4> r1{}, r2{};
                        for (int i = 0; i < 4; ++i)
                            for (int j = 0; j < 4; ++j) {
                                r1[i] += 2 * A[i][j] * v[j];
                                r2[i] += 2 * B[i][j] * v[j];
                            }
                        double j11 = r1[free_a], j12 = r1[free_b];
                        double j21 = r2[free_a], j22 = r2[free_b];
                        double dj = j11 * j22 - j12 * j21;
                        if (std::fabs(dj) < 1e-14) break;
                        v[free_a] -= (f1 * j22 - f2 * j12) / dj;
                        v[free_b] -= (j11 * f2 - j21 * f1) / dj;
                    }
                    double norm = 0;
                    for (double x : v) norm += x * x;
                    norm = std::sqrt(norm);
                    if (norm < 1e-8 || !std::isfinite(norm)) continue;
                    for (double& x : v) x /= norm;
                    double res = std::hypot(dform(A, v), dform(B, v));
                    double sv = min_singular_value(A, B, v);
                    if (res < 1e-12 && sv > 1e-8) {
                        best.ok = true;
                        best.x = v;
                        best.residual = res;
                        best.min_sv = sv;
                        return best;
                    }
                }
        }
    return best;
}

}  // namespace

SolubilityVerdict real_soluble_quadric_intersection(const QuadricIntersectionModel& QI) {
    SolubilityVerdict out;
    out.place = 0;

    // definite member => insoluble over R. The definite region of the pencil
    // is a union of components of P^1(R) minus the roots of the pencil
    // determinant, so sampling every component decides this branch exactly.
    BinaryQuarticForm F = pencil_determinant(QI);
    Poly f = F.dehomogenized();
    std::vector<Rat> samples;
    samples.emplace_back(0);
    if (f.degree() >= 1) {
        auto intervals = isolate_real_roots(f);
        Rat lo = -f.cauchy_root_bound() - 1, hi = f.cauchy_root_bound() + 1;
        samples.push_back(lo);
        samples.push_back(hi);
        for (size_t i = 0; i + 1 < intervals.size(); ++i)
            samples.push_back((intervals[i].hi + intervals[i + 1].lo) / 2);
        for (const auto& iv : intervals) {
            samples.push_back(iv.lo);
            samples.push_back(iv.hi);
        }
    }
    for (const Rat& lam : samples) {
        if (f(lam) == 0) continue;  // singular member, never definite
        if (member_definite(pencil_member(QI, lam, Rat(1)))) {
            out.status = Solubility::kInsoluble;
            out.certificate = CertificateKind::kDefiniteForm;
            out.detail = "pencil member at lambda = " + rat_to_string(lam) +
                         " is definite (exact Sylvester minors)";
            return out;
        }
    }
    // the mu = 0 member
    if (F.coeff[0] != 0 && member_definite(pencil_member(QI, Rat(1), Rat(0)))) {
        out.status = Solubility::kInsoluble;
        out.certificate = CertificateKind::kDefiniteForm;
        out.detail = "pencil member at infinity is definite";
        return out;
    }

    NewtonResult nr = newton_search(QI);
    if (nr.ok) {
        out.status = Solubility::kSoluble;
        out.certificate = CertificateKind::kLiftingWitness;
        LocalWitness w;
        w.prime = 0;
        w.real_coords.assign(nr.x.begin(), nr.x.end());
        w.residual = nr.residual;
        w.jacobian_min_sv = nr.min_sv;
        out.witness = w;
        std::ostringstream os;
        os << "Newton point, residual " << nr.residual << ", Jacobian rank 2";
        out.detail = os.str();
        return out;
    }
    out.status = Solubility::kUnknown;
    out.certificate = CertificateKind::kSignAnalysis;
    out.detail = "no definite member found and Newton search did not certify a point";
    return out;
}

// ---------------------------------------------------------------------------
// bad primes
// ---------------------------------------------------------------------------

namespace {

// largest s with s^2 dividing n; returns n / s^2
Int square_content_reduce(const Int& n) {
    Int rest = 1;
    for (auto& [p, e] : factorize(n)) rest *= pow_int(p, e % 2);
    return rest;
}

std::vector<Int> sorted_union_with_two(const std::vector<Int>& primes) {
    std::set<Int> s(primes.begin(), primes.end());
    s.insert(2);
    return {s.begin(), s.end()};
}

}  // namespace

bool has_smooth_point_mod_p(const QuarticCurveModel& C, const Int& p) {
    // x0 with g(x0) a nonzero square mod p lifts (y != 0 is a smooth point);
    // also check the reversed chart
    std::vector<Int> direct = integral_rhs(C.quartic());
    std::vector<Int> reciprocal(direct.rbegin(), direct.rend());
    if (p == 2) return false;  // leave 2 to the residue tree, never filter it
    for (const auto& co : {direct, reciprocal}) {
        for (Int x = 0; x < p; ++x) {
            Int v = eval_int(co, x) % p;
            if (v != 0 && unit_is_square(((v % p) + p) % p, p)) return true;
        }
    }
    return false;
}

bool has_smooth_point_mod_p(const QuadricIntersectionModel& QI, const Int& p) {
    if (p == 2) return false;
    if (p > 1000) return false;  // enumeration too large; caller keeps the prime
    for (const auto& v : qi_level_one(QI, p)) {
        MinorInfo info = best_minor(QI, v, p);
        if (info.val == 0) return true;
    }
    return false;
}

BadPrimes bad_primes(const QuarticCurveModel& C) {
    if (!C.smooth()) throw std::invalid_argument("bad_primes: singular model");
    Poly g = C.quartic() * Rat(C.quartic().denominator_lcm());
    Rat ld = g.lc() * discriminant(g);
    Int n = Int(ld.get_num()) * Int(ld.get_den());
    BadPrimes out;
    out.raw = sorted_union_with_two(prime_divisors(n));
    // reduced model: strip square content from g (a y-rescaling that does not
    // change solubility anywhere)
    Int content = g.integer_content();
    Int sq = 1;
    for (auto& [p, e] : factorize(content)) sq *= pow_int(p, 2 * (e / 2));
    Poly gred = g * Rat(Int(1), sq);
    QuarticCurveModel Cred{gred.coeff(4), gred.coeff(2), gred.coeff(1), gred.coeff(0)};
    Rat ldr = gred.lc() * discriminant(gred);
    Int nr = Int(ldr.get_num());
    for (const Int& p : out.raw) {
        bool essential = (p == 2) || val_int(nr, p) > 0;
        if (essential || !has_smooth_point_mod_p(Cred, p))
            out.filtered.push_back(p);
    }
    return out;
}

BadPrimes bad_primes(const QuadricIntersectionModel& QI) {
    BinaryQuarticForm F = pencil_determinant(QI);
    auto [fprim, content] = primitive_form(F);
    Rat dprim = binary_disc(fprim);
    if (dprim == 0)
        throw std::invalid_argument("bad_primes: singular model (zero pencil discriminant)");
    BadPrimes out;
    // disc(c*F) = c^6 disc(F): the raw set carries the content primes too
    out.raw = sorted_union_with_two(prime_divisors(Int(dprim.get_num()) * content));
    // square scalings of the pencil are invisible to the reduction type
    Int essential_mass = Int(dprim.get_num()) * square_content_reduce(content);
    for (const Int& p : out.raw) {
        bool essential = (p == 2) || val_int(essential_mass, p) > 0;
        if (essential || !has_smooth_point_mod_p(QI, p))
            out.filtered.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// aggregation
// ---------------------------------------------------------------------------

namespace {

template <typename Model>
std::vector<SolubilityVerdict> everywhere_impl(
    const Model& model, int depth_cap,
    SolubilityVerdict (*real_fn)(const Model&),
    SolubilityVerdict (*padic_fn)(const Model&, const Int&, int)) {
    std::vector<SolubilityVerdict> out;
    out.push_back(real_fn(model));
    BadPrimes bp = bad_primes(model);
    for (const Int& p : bp.filtered) out.push_back(padic_fn(model, p, depth_cap));
    SolubilityVerdict good;
    good.place = -1;
    good.status = Solubility::kSoluble;
    good.certificate = CertificateKind::kGoodReduction;
    std::string s;
    for (const Int& p : bp.filtered) s += (s.empty() ? "" : ", ") + p.get_str();
    good.detail = "smooth model: soluble by good reduction outside {" + s + "}";
    out.push_back(good);
    return out;
}

}  // namespace

std::vector<SolubilityVerdict> everywhere_locally_soluble(const QuarticCurveModel& C,
                                                          int depth_cap) {
    return everywhere_impl<QuarticCurveModel>(C, depth_cap, &real_soluble_quartic,
                                              &quartic_locally_soluble);
}

std::vector<SolubilityVerdict> everywhere_locally_soluble(const QuadricIntersectionModel& QI,
                                                          int depth_cap) {
    return everywhere_impl<QuadricIntersectionModel>(
        QI, depth_cap, &real_soluble_quadric_intersection,
        &quadric_intersection_locally_soluble);
}

bool all_soluble(const std::vector<SolubilityVerdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const SolubilityVerdict& v) { return v.soluble(); });
}

}  // namespace fourdescent
