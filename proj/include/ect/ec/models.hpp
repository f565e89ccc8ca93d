#pragma once

#include <array>

#include "ect/ec/curve.hpp"

namespace ect {

// (x, y) -> (w^2 x - 1/12, w^3 y - w^2 x / 2 + 1/24) onto
// y^2 + xy = x^3 + a' x + b' with a' = w^4 a + 1/48, b' = w^6 b + a'/12 - 1/864.
template <class F>
struct TateNormalMap {
    WeierstrassCurve<F> source;
    TateNormalCurve<F> target;
    F w;

    F map_x(const F& x) const { return F(w * w * x) - F(Rational(1, 12)); }
    CurvePoint<F> operator()(const CurvePoint<F>& P) const {
        if (P.infinity) return P;
        F w2x = w * w * P.x;
        return CurvePoint<F>::affine(w2x - F(Rational(1, 12)),
                                     F(w * w * w * P.y) - F(Rational(1, 2)) * w2x + F(Rational(1, 24)));
    }
    CurvePoint<F> inverse(const CurvePoint<F>& Q) const {
        if (Q.infinity) return Q;
        F w2 = w * w;
        F x = F(Q.x + F(Rational(1, 12))) / w2;
        F y = F(Q.y + F(Rational(1, 2)) * Q.x) / F(w2 * w);
        return CurvePoint<F>::affine(x, y);
    }
};

template <class F>
TateNormalMap<F> to_tate_normal(const WeierstrassCurve<F>& E, const F& w) {
    if (is_zero(w)) fail(Errc::ZeroTwist, "twist parameter w must be nonzero");
    F w2 = w * w;
    F w4 = w2 * w2;
    F ap = F(w4 * E.a) + F(Rational(1, 48));
    F bp = F(w4 * w2 * E.b) + F(Rational(1, 12)) * ap - F(Rational(1, 864));
    return {E, TateNormalCurve<F>{ap, bp}, w};
}

// (x, y) -> ((x - e1)/r^2, y/r^3) with r^2 = e2 - e1 onto
// y^2 = x(x-1)(x-lambda), lambda = (e3 - e1)/(e2 - e1).
template <class F>
struct LegendreMap {
    WeierstrassCurve<F> source;
    LegendreCurve<F> target;
    std::array<F, 3> roots;
    F r;

    F map_x(const F& x) const { return F(x - roots[0]) / F(r * r); }
    CurvePoint<F> operator()(const CurvePoint<F>& P) const {
        if (P.infinity) return P;
        F r2 = r * r;
        return CurvePoint<F>::affine(F(P.x - roots[0]) / r2, P.y / F(r2 * r));
    }
    CurvePoint<F> inverse(const CurvePoint<F>& Q) const {
        if (Q.infinity) return Q;
        F r2 = r * r;
        return CurvePoint<F>::affine(F(r2 * Q.x) + roots[0], F(r2 * r * Q.y));
    }
};

// roots must be the three roots of x^3 + ax + b in the chosen order, and
// r a square root of roots[1] - roots[0].
template <class F>
LegendreMap<F> weierstrass_to_legendre(const WeierstrassCurve<F>& E, const std::array<F, 3>& roots, const F& r) {
    if (is_zero(E.discriminant())) fail(Errc::SingularCurve, "4a^3 + 27b^2 = 0");
    for (const F& e : roots)
        if (!is_zero(E.rhs(e))) fail(Errc::InvalidArgument, "supplied value is not a root of x^3 + ax + b");
    if (roots[0] == roots[1] || roots[0] == roots[2] || roots[1] == roots[2])
        fail(Errc::SingularCurve, "roots must be distinct");
    F d = roots[1] - roots[0];
    if (!(F(r * r) == d)) fail(Errc::InvalidArgument, "r^2 must equal e2 - e1");
    F lambda = F(roots[2] - roots[0]) / d;
    return {E, make_legendre(lambda), roots, r};
}

// Completing the square and cube: (x, y) -> (36x + 3b2, 108(2y + a1 x + a3))
// onto y^2 = x^3 - 27c4 x - 54c6.
template <class F>
struct ShortModelMap {
    LongWeierstrass<F> source;
    WeierstrassCurve<F> target;

    CurvePoint<F> operator()(const CurvePoint<F>& P) const {
        if (P.infinity) return P;
        return CurvePoint<F>::affine(F(Rational(36)) * P.x + F(Rational(3)) * source.b2(),
                                     F(Rational(108)) * F(F(Rational(2)) * P.y + F(source.a1 * P.x) + source.a3));
    }
};

template <class F>
ShortModelMap<F> short_model(const LongWeierstrass<F>& E) {
    if (is_zero(E.discriminant())) fail(Errc::SingularCurve, "singular curve");
    return {E, WeierstrassCurve<F>{F(Rational(-27)) * E.c4(), F(Rational(-54)) * E.c6()}};
}

// Rational curves: find the roots in a quadratic tower (ordered as given by
// `order`, a permutation of 0,1,2 applied to the sorted root list) and the
// square root r, extending the tower as needed.
LegendreMap<QuadElem> weierstrass_to_legendre(const WeierstrassCurve<Rational>& E,
                                              const std::array<int, 3>& order = {0, 1, 2});

// Roots of x^3 + ax + b in Q or one quadratic extension, in a fixed order:
// rational roots ascending, then the conjugate pair with +sqrt first.
std::array<QuadElem, 3> cubic_roots_in_tower(const WeierstrassCurve<Rational>& E);

}  // namespace ect
