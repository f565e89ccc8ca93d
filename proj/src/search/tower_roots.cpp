#include "ect/search/search.hpp"

namespace ect {

namespace {

using KPoly = Poly<QuadElem>;

std::vector<QuadElem> quadratic_roots(const QuadElem& p, const QuadElem& c) {
    QuadElem s = quad_sqrt(p * p - QuadElem(Rational(4)) * c);
    QuadElem h(Rational(1, 2));
    return {(s - p) * h, (-s - p) * h};
}

}  // namespace

std::optional<std::vector<QuadElem>> tower_roots(const QPoly& g0) {
    if (g0.degree() < 1) fail(Errc::InvalidArgument, "tower_roots needs a non-constant polynomial");
    QPoly g = monic(g0);
    try {
        switch (g.degree()) {
            case 1:
                return std::vector<QuadElem>{QuadElem(Rational(-g.coeff(0)))};
            case 2:
                return quadratic_roots(QuadElem(g.coeff(1)), QuadElem(g.coeff(0)));
            case 4:
                break;
            default:
                return std::nullopt;
        }
        Rational p = g.coeff(3), q = g.coeff(2), r = g.coeff(1), e = g.coeff(0);
        // resolvent cubic in theta = a1 a2 + a3 a4
        QPoly cubic({Rational(-(p * p * e - 4 * q * e + r * r)), Rational(p * r - 4 * e), Rational(-q), Rational(1)});
        auto th = rational_roots(cubic);
        if (th.size() != 3) return std::nullopt;
        KPoly gK = g.map([](const Rational& c) { return QuadElem(c); });
        QuadElem h(Rational(1, 2));
        for (const Rational& t : th) {
            QuadElem ssum = quad_sqrt(QuadElem(Rational(p * p - 4 * (q - t))));
            QuadElem sprod = quad_sqrt(QuadElem(Rational(t * t - 4 * e)));
            for (int sign : {1, -1}) {
                QuadElem S = (ssum - QuadElem(p)) * h;
                QuadElem P = (QuadElem(t) + QuadElem(Rational(sign)) * sprod) * h;
                KPoly f1(std::vector<QuadElem>{P, -S, QuadElem(Rational(1))});
                if (!(gK % f1).zero()) continue;
                KPoly f2 = exact_div(gK, f1);
                auto r1 = quadratic_roots(f1.coeff(1), f1.coeff(0));
                auto r2 = quadratic_roots(f2.coeff(1), f2.coeff(0));
                r1.insert(r1.end(), r2.begin(), r2.end());
                return r1;
            }
        }
        return std::nullopt;
    } catch (const Error& err) {
        if (err.code() == Errc::NotASquare || err.code() == Errc::TowerDepthExceeded) return std::nullopt;
        throw;
    }
}

}  // namespace ect
