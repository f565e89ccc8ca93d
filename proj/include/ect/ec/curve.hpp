#pragma once

#include <string>

#include "ect/errors.hpp"
#include "ect/arith/quad.hpp"

namespace ect {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.  Every model below is a
// special case; the group law is written once against this shape.
template <class F>
struct LongWeierstrass {
    F a1, a2, a3, a4, a6;

    F b2() const { return F(a1 * a1) + F(Rational(4)) * a2; }
    F b4() const { return F(Rational(2)) * a4 + F(a1 * a3); }
    F b6() const { return F(a3 * a3) + F(Rational(4)) * a6; }
    F b8() const {
        return F(a1 * a1 * a6) + F(Rational(4)) * a2 * a6 - F(a1 * a3 * a4) + F(a2 * a3 * a3) - F(a4 * a4);
    }
    F c4() const { return F(b2() * b2()) - F(Rational(24)) * b4(); }
    F c6() const {
        F B2 = b2(), B4 = b4();
        return F(-(B2 * B2 * B2)) + F(Rational(36)) * B2 * B4 - F(Rational(216)) * b6();
    }
    F discriminant() const {
        F B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return F(-(B2 * B2 * B8)) - F(Rational(8)) * B4 * B4 * B4 - F(Rational(27)) * B6 * B6 +
               F(Rational(9)) * B2 * B4 * B6;
    }
    F j() const {
        F d = discriminant();
        if (is_zero(d)) fail(Errc::SingularCurve, "singular curve has no j-invariant");
        F c = c4();
        return F(c * c * c) / d;
    }
    // Left side minus right side of the equation.
    F equation(const F& x, const F& y) const {
        return F(y * y) + F(a1 * x * y) + F(a3 * y) - F(x * x * x) - F(a2 * x * x) - F(a4 * x) - a6;
    }
};

// y^2 = x^3 + a x + b
template <class F>
struct WeierstrassCurve {
    F a, b;

    F discriminant() const { return F(Rational(4)) * a * a * a + F(Rational(27)) * b * b; }
    F rhs(const F& x) const { return F(x * x * x) + F(a * x) + b; }
    LongWeierstrass<F> general() const { return {F(), F(), F(), a, b}; }
};

// y^2 = x(x-1)(x-lambda)
template <class F>
struct LegendreCurve {
    F lambda;

    LongWeierstrass<F> general() const { return {F(), F(-(F(Rational(1)) + lambda)), F(), lambda, F()}; }
};

// y^2 + xy = x^3 + a' x + b'
template <class F>
struct TateNormalCurve {
    F a, b;

    LongWeierstrass<F> general() const { return {F(Rational(1)), F(), F(), a, b}; }
};

template <class F>
WeierstrassCurve<F> make_weierstrass(const F& a, const F& b) {
    WeierstrassCurve<F> E{a, b};
    if (is_zero(E.discriminant())) fail(Errc::SingularCurve, "4a^3 + 27b^2 = 0");
    return E;
}

template <class F>
LegendreCurve<F> make_legendre(const F& lambda) {
    if (is_zero(lambda) || is_zero(F(lambda - F(Rational(1)))))
        fail(Errc::DegenerateLambda, "lambda must differ from 0 and 1");
    return {lambda};
}

template <class F>
TateNormalCurve<F> make_tate_normal(const F& a, const F& b) {
    TateNormalCurve<F> E{a, b};
    if (is_zero(E.general().discriminant())) fail(Errc::SingularCurve, "Tate-normal model is singular");
    return E;
}

template <class F>
F j_weierstrass(const F& a, const F& b) {
    F d = F(Rational(4)) * a * a * a + F(Rational(27)) * b * b;
    if (is_zero(d)) fail(Errc::SingularCurve, "4a^3 + 27b^2 = 0");
    return F(Rational(6912)) * a * a * a / d;
}

template <class F>
F j_legendre(const F& lambda) {
    F one(Rational(1));
    F lm1 = lambda - one;
    if (is_zero(lambda) || is_zero(lm1)) fail(Errc::DegenerateLambda, "lambda must differ from 0 and 1");
    F s = F(lambda * lambda) - lambda + one;
    return F(Rational(256)) * s * s * s / F(lambda * lambda * lm1 * lm1);
}

template <class F>
struct CurvePoint {
    bool infinity = true;
    F x, y;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(F x, F y) { return {false, std::move(x), std::move(y)}; }
    friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }
};

template <class F>
bool on_curve(const CurvePoint<F>& P, const LongWeierstrass<F>& E) {
    return P.infinity || is_zero(E.equation(P.x, P.y));
}

template <class F, class Curve>
bool on_curve(const CurvePoint<F>& P, const Curve& E) {
    return on_curve(P, E.general());
}

template <class F>
CurvePoint<F> point_neg(const CurvePoint<F>& P, const LongWeierstrass<F>& E) {
    if (P.infinity) return P;
    return CurvePoint<F>::affine(P.x, F(-P.y) - F(E.a1 * P.x) - E.a3);
}

template <class F>
CurvePoint<F> point_add(const CurvePoint<F>& P, const CurvePoint<F>& Q, const LongWeierstrass<F>& E) {
    if (!on_curve(P, E) || !on_curve(Q, E)) fail(Errc::PointNotOnCurve, "point does not satisfy the curve equation");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    F slope;
    if (P.x == Q.x) {
        F s = P.y + Q.y + F(E.a1 * Q.x) + E.a3;
        if (is_zero(s)) return CurvePoint<F>::at_infinity();
        F num = F(Rational(3)) * P.x * P.x + F(Rational(2)) * E.a2 * P.x + E.a4 - F(E.a1 * P.y);
        F den = F(Rational(2)) * P.y + F(E.a1 * P.x) + E.a3;
        slope = num / den;
    } else {
        slope = F(Q.y - P.y) / F(Q.x - P.x);
    }
    F nu = P.y - F(slope * P.x);
    F x3 = F(slope * slope) + F(E.a1 * slope) - E.a2 - P.x - Q.x;
    F y3 = F(-(slope + E.a1)) * x3 - nu - E.a3;
    return CurvePoint<F>::affine(std::move(x3), std::move(y3));
}

template <class F, class Curve>
CurvePoint<F> point_add(const CurvePoint<F>& P, const CurvePoint<F>& Q, const Curve& E) {
    return point_add(P, Q, E.general());
}

template <class F, class Curve>
CurvePoint<F> point_neg(const CurvePoint<F>& P, const Curve& E) {
    return point_neg(P, E.general());
}

template <class F, class Curve>
CurvePoint<F> scalar_mul(long n, const CurvePoint<F>& P, const Curve& curve) {
    LongWeierstrass<F> E = curve.general();
    if (!on_curve(P, E)) fail(Errc::PointNotOnCurve, "point does not satisfy the curve equation");
    CurvePoint<F> base = n < 0 ? point_neg(P, E) : P;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CurvePoint<F> acc;
    while (k) {
        if (k & 1) acc = point_add(acc, base, E);
        k >>= 1;
        if (k) base = point_add(base, base, E);
    }
    return acc;
}

}  // namespace ect
