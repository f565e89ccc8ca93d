#include "ect/ec/models.hpp"

#include <algorithm>

#include "ect/ec/torsion.hpp"

namespace ect {

std::vector<int> maximal_proper_divisors(int n) {
    std::vector<int> out;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        out.push_back(n / p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) out.push_back(n / m);
    std::sort(out.begin(), out.end());
    return out;
}

std::array<QuadElem, 3> cubic_roots_in_tower(const WeierstrassCurve<Rational>& E) {
    QPoly cubic({E.b, E.a, Rational(0), Rational(1)});
    auto rr = rational_roots(cubic);
    if (rr.empty()) fail(Errc::RootsNotInTower, "x^3 + ax + b is irreducible over Q");
    std::array<QuadElem, 3> out;
    if (rr.size() == 3) {
        for (int i = 0; i < 3; ++i) out[i] = QuadElem(rr[i]);
        return out;
    }
    QPoly q = exact_div(cubic, QPoly({Rational(-rr[0]), Rational(1)}));
    if (rr.size() == 2) {
        // one root is double, so the curve is singular
        fail(Errc::SingularCurve, "x^3 + ax + b has a repeated root");
    }
    // x^2 + px + c: roots (-p +- sqrt(p^2 - 4c))/2
    Rational p = q.coeff(1), c = q.coeff(0);
    QuadElem s = quad_sqrt(QuadElem(Rational(p * p - 4 * c)));
    out[0] = QuadElem(rr[0]);
    out[1] = (QuadElem(Rational(-p)) + s) * QuadElem(Rational(1, 2));
    out[2] = (QuadElem(Rational(-p)) - s) * QuadElem(Rational(1, 2));
    return out;
}

LegendreMap<QuadElem> weierstrass_to_legendre(const WeierstrassCurve<Rational>& E, const std::array<int, 3>& order) {
    if (is_zero(E.discriminant())) fail(Errc::SingularCurve, "4a^3 + 27b^2 = 0");
    std::array<int, 3> chk = order;
    std::sort(chk.begin(), chk.end());
    if (chk != std::array<int, 3>{0, 1, 2}) fail(Errc::InvalidArgument, "root order must be a permutation of 0,1,2");
    auto sorted = cubic_roots_in_tower(E);
    std::array<QuadElem, 3> roots{sorted[order[0]], sorted[order[1]], sorted[order[2]]};
    QuadElem r;
    try {
        r = quad_sqrt(roots[1] - roots[0]);
    } catch (const Error& e) {
        if (e.code() == Errc::NotASquare || e.code() == Errc::TowerDepthExceeded)
            fail(Errc::RootsNotInTower, "e2 - e1 has no square root in a depth-2 tower");
        throw;
    }
    WeierstrassCurve<QuadElem> EK{QuadElem(E.a), QuadElem(E.b)};
    return weierstrass_to_legendre(EK, roots, r);
}

}  // namespace ect
