#include "fourdescent/covering.hpp"

#include <stdexcept>

namespace fourdescent {

namespace {

std::vector<std::vector<Rat>> pencil_matrix(const Mat4Q& m1, const Mat4Q& m2,
                                            const Rat& lam, const Rat& mu) {
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = lam * m1[i][j] + mu * m2[i][j];
    return m;
}

// det(lambda M1 + M2) has degree <= 4 in lambda; five evaluations pin it down.
BinaryQuarticForm pencil_det_impl(const Mat4Q& m1, const Mat4Q& m2) {
    std::array<Rat, 5> samples = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)};
    std::array<Rat, 5> values;
    for (int i = 0; i < 5; ++i)
        values[i] = det(pencil_matrix(m1, m2, samples[i], Rat(1)));
    // Lagrange interpolation to a degree-<=4 polynomial in lambda
    Poly f;
    for (int i = 0; i < 5; ++i) {
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            basis = basis * Poly({-samples[j], Rat(1)});
            denom *= samples[i] - samples[j];
        }
        f = f + basis * (values[i] / denom);
    }
    BinaryQuarticForm out;
    for (int i = 0; i <= 4; ++i) out.coeff[i] = f.coeff(4 - i);
    return out;
}

int rank2x16(const std::array<std::array<Rat, 16>, 2>& rows) {
    std::array<std::array<Rat, 16>, 2> m = rows;
    int rank = 0, lead = 0;
    for (int r = 0; r < 2 && lead < 16; ++r) {
        int piv = -1;
        for (int rr = r; rr < 2; ++rr)
            if (m[rr][lead] != 0) { piv = rr; break; }
        if (piv < 0) { ++lead; --r; continue; }
        std::swap(m[r], m[piv]);
        for (int rr = 0; rr < 2; ++rr) {
            if (rr == r || m[rr][lead] == 0) continue;
            Rat f = m[rr][lead] / m[r][lead];
            for (int k = lead; k < 16; ++k) m[rr][k] -= f * m[r][k];
        }
        ++rank;
        ++lead;
    }
    return rank;
}

std::array<Rat, 16> flatten(const Mat4Z& m) {
    std::array<Rat, 16> v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[4 * i + j] = Rat(m[i][j]);
    return v;
}

bool in_span(const std::array<Rat, 16>& u, const std::array<Rat, 16>& b1,
             const std::array<Rat, 16>& b2) {
    // solve u = alpha b1 + beta b2 exactly
    // pick two pivot coordinates where (b1, b2) has rank 2
    for (int i = 0; i < 16; ++i) {
        for (int j = i + 1; j < 16; ++j) {
            Rat d = b1[i] * b2[j] - b1[j] * b2[i];
            if (d == 0) continue;
            Rat alpha = (u[i] * b2[j] - u[j] * b2[i]) / d;
            Rat beta = (b1[i] * u[j] - b1[j] * u[i]) / d;
            for (int k = 0; k < 16; ++k)
                if (alpha * b1[k] + beta * b2[k] != u[k]) return false;
            return true;
        }
    }
    return false;  // b1, b2 dependent
}

}  // namespace

Poly BinaryQuarticForm::dehomogenized() const {
    return Poly({coeff[4], coeff[3], coeff[2], coeff[1], coeff[0]});
}

ShortWeierstrassCurve resolvent_jacobian(const QuarticCurveModel& C) {
    const Rat &a = C.a, &c = C.c, &d = C.d, &e = C.e;
    Rat I = 12 * a * e + c * c;
    Rat J = 72 * a * c * e - 27 * a * d * d - 2 * c * c * c;
    ShortWeierstrassCurve E{-27 * I, -27 * J};
    if (!E.nonsingular())
        throw std::invalid_argument("resolvent_jacobian: degenerate input (singular resolvent)");
    return E;
}

QuadricPair two_covering_quadrics(const QuarticCurveModel& C) {
    QuadricPair p;
    for (auto& row : p.first)
        for (auto& x : row) x = Rat(0);
    p.second = p.first;
    Rat half(1, 2);
    // coordinates (u, t, x, y); Q = ut - x^2
    p.first[0][1] = p.first[1][0] = half;
    p.first[2][2] = Rat(-1);
    // Q' = -y^2 + a u^2 + c u t + d x t + e t^2
    p.second[0][0] = C.a;
    p.second[0][1] = p.second[1][0] = C.c * half;
    p.second[1][1] = C.e;
    p.second[1][2] = p.second[2][1] = C.d * half;
    p.second[3][3] = Rat(-1);
    return p;
}

QuadricIntersectionModel QuadricIntersectionModel::from_rational(const QuadricPair& pair) {
    QuadricIntersectionModel out;
    const Mat4Q* src[2] = {&pair.first, &pair.second};
    Mat4Z* dst[2] = {&out.m1, &out.m2};
    for (int s = 0; s < 2; ++s) {
        Int lcm = 1;
        for (const auto& row : *src[s])
            for (const auto& x : row)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        Int content = 0;
        Mat4Z m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rat v = (*src[s])[i][j] * Rat(lcm);
                m[i][j] = v.get_num();
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m[i][j].get_mpz_t());
            }
        if (content == 0)
            throw std::invalid_argument("QuadricIntersectionModel: zero matrix");
        int sign = 0;
        for (int i = 0; i < 4 && sign == 0; ++i)
            if (m[i][i] != 0) sign = (m[i][i] > 0) ? -1 : 1;
        if (sign == 0) {
            for (int i = 0; i < 4 && sign == 0; ++i)
                for (int j = 0; j < 4 && sign == 0; ++j)
                    if (m[i][j] != 0) sign = (m[i][j] > 0) ? 1 : -1;
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) (*dst[s])[i][j] = m[i][j] * sign / content;
    }
    return out;
}

QuadricIntersectionModel build_four_covering(const QuarticCurveModel& C,
                                             const AlgebraElement& eps) {
    if (!C.smooth())
        throw std::invalid_argument("build_four_covering: singular quartic model");
    if (!epsilon_admissible(eps, C.a))
        throw std::invalid_argument(
            "build_four_covering: inadmissible epsilon (N(eps)/a is not a square)");
    QuarticAlgebra alg = QuarticAlgebra::from_quartic(C.quartic());
    if (!(*eps.algebra == alg))
        throw std::invalid_argument("build_four_covering: eps lives in a different algebra");

    // The square (sum_j x_j theta^(j-1))^2 contributes theta^(j+k-2) to the
    // (j,k) entry, so the theta^r coefficient form is the Hankel matrix of
    // coord_r(eps * theta^m), m = j+k-2 in 0..6.
    std::array<AlgebraElement, 7> eps_theta_pow;
    eps_theta_pow[0] = eps;
    AlgebraElement th = AlgebraElement::theta(alg);
    for (int m = 1; m < 7; ++m) eps_theta_pow[m] = nf_mul(eps_theta_pow[m - 1], th);

    QuadricPair pair;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            pair.first[i][j] = eps_theta_pow[i + j].coord[2];
            pair.second[i][j] = eps_theta_pow[i + j].coord[3];
        }
    QuadricIntersectionModel model = QuadricIntersectionModel::from_rational(pair);
    BinaryQuarticForm F = pencil_determinant(model);
    if (discriminant(F.dehomogenized()) == 0)
        throw std::invalid_argument("build_four_covering: degenerate pencil");
    return model;
}

BinaryQuarticForm pencil_determinant(const QuadricPair& pair) {
    return pencil_det_impl(pair.first, pair.second);
}

BinaryQuarticForm pencil_determinant(const QuadricIntersectionModel& model) {
    Mat4Q m1, m2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m1[i][j] = Rat(model.m1[i][j]);
            m2[i][j] = Rat(model.m2[i][j]);
        }
    return pencil_det_impl(m1, m2);
}

std::pair<Rat, Rat> binary_quartic_invariants(const BinaryQuarticForm& F) {
    const Rat &a = F.coeff[0], &b = F.coeff[1], &c = F.coeff[2], &d = F.coeff[3],
              &e = F.coeff[4];
    Rat I = 12 * a * e - 3 * b * d + c * c;
    Rat J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e -
            2 * c * c * c;
    return {I, J};
}

bool same_pencil_span(const QuadricIntersectionModel& a,
                      const QuadricIntersectionModel& b) {
    auto a1 = flatten(a.m1), a2 = flatten(a.m2);
    auto b1 = flatten(b.m1), b2 = flatten(b.m2);
    if (rank2x16({a1, a2}) != 2 || rank2x16({b1, b2}) != 2) return false;
    return in_span(b1, a1, a2) && in_span(b2, a1, a2) && in_span(a1, b1, b2) &&
           in_span(a2, b1, b2);
}

Int quadric_form_value(const Mat4Z& m, const std::array<Int, 4>& v) {
    Int acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += m[i][j] * v[i] * v[j];
    return acc;
}

std::array<Int, 4> quadric_gradient(const Mat4Z& m, const std::array<Int, 4>& v) {
    std::array<Int, 4> g;
    for (int i = 0; i < 4; ++i) {
        g[i] = 0;
        for (int j = 0; j < 4; ++j) g[i] += m[i][j] * v[j];
        g[i] *= 2;
    }
    return g;
}

}  // namespace fourdescent
