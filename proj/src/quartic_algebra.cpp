#include "fourdescent/quartic_algebra.hpp"

#include <stdexcept>

namespace fourdescent {

QuarticAlgebra QuarticAlgebra::from_quartic(const Poly& quartic) {
    if (quartic.degree() != 4)
        throw std::invalid_argument("QuarticAlgebra: defining polynomial must have degree 4");
    Poly m = quartic.monic();
    if (discriminant(m) == 0)
        throw std::invalid_argument("QuarticAlgebra: repeated roots (zero discriminant)");
    bool red = !is_irreducible_deg_le_4(m);
    return QuarticAlgebra{m, quartic.lc(), red};
}

AlgebraElement AlgebraElement::make(const QuarticAlgebra& alg, std::array<Rat, 4> c) {
    return AlgebraElement{std::move(c), &alg};
}

AlgebraElement AlgebraElement::scalar(const QuarticAlgebra& alg, const Rat& c) {
    return AlgebraElement{{c, Rat(0), Rat(0), Rat(0)}, &alg};
}

AlgebraElement AlgebraElement::theta(const QuarticAlgebra& alg) {
    return AlgebraElement{{Rat(0), Rat(1), Rat(0), Rat(0)}, &alg};
}

AlgebraElement nf_mul(const AlgebraElement& u, const AlgebraElement& v) {
    if (u.algebra == nullptr || v.algebra == nullptr ||
        !(*u.algebra == *v.algebra))
        throw std::invalid_argument("nf_mul: elements of different algebras");
    const Poly& m = u.algebra->modulus;
    // schoolbook product, degree <= 6
    std::array<Rat, 7> prod;
    prod.fill(Rat(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) prod[i + j] += u.coord[i] * v.coord[j];
    // reduce theta^k for k = 4..6 using theta^4 = -(m3 t^3 + m2 t^2 + m1 t + m0)
    for (int k = 6; k >= 4; --k) {
        if (prod[k] == 0) continue;
        Rat c = prod[k];
        prod[k] = 0;
        for (int j = 0; j < 4; ++j) prod[k - 4 + j] -= c * m.coeff(j);
    }
    return AlgebraElement{{prod[0], prod[1], prod[2], prod[3]}, u.algebra};
}

Rat nf_norm(const AlgebraElement& u) {
    if (u.algebra == nullptr) throw std::invalid_argument("nf_norm: detached element");
    // columns: u * theta^j in the power basis
    std::vector<std::vector<Rat>> mat(4, std::vector<Rat>(4, Rat(0)));
    AlgebraElement cur = u;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) mat[i][j] = cur.coord[i];
        if (j < 3) cur = nf_mul(cur, AlgebraElement::theta(*u.algebra));
    }
    return det(std::move(mat));
}

bool epsilon_admissible(const AlgebraElement& eps, const Rat& a) {
    if (a == 0) throw std::invalid_argument("epsilon_admissible: a must be nonzero");
    Rat n = nf_norm(eps);
    if (n == 0) throw std::invalid_argument("epsilon_admissible: non-invertible element");
    return square_class(n / a).representative == 1;
}

}  // namespace fourdescent
