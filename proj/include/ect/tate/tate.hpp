#pragma once

#include <optional>
#include <vector>

#include "ect/arith/laurent.hpp"
#include "ect/ec/curve.hpp"

namespace ect {

// sigma_k(m) for m = 0..K-1 (sigma_k(0) = 0).
std::vector<Integer> divisor_sums(int k, long K);
// Coefficients of q^0..q^{K-1}: a4 = -5 s3, a6 = -(5 s3 + 7 s5)/12.
std::vector<Integer> a4_coefficients(long K);
std::vector<Integer> a6_coefficients(long K);

namespace detail {
template <class F>
std::vector<F> lift_coefficients(const std::vector<Integer>& c) {
    std::vector<F> out;
    out.reserve(c.size());
    for (const Integer& z : c) out.push_back(F(Rational(z)));
    return out;
}
}  // namespace detail

template <class F>
LaurentSeries<F> a4_series(long K) {
    return LaurentSeries<F>::truncated(0, detail::lift_coefficients<F>(a4_coefficients(K)), K);
}
template <class F>
LaurentSeries<F> a6_series(long K) {
    return LaurentSeries<F>::truncated(0, detail::lift_coefficients<F>(a6_coefficients(K)), K);
}

// y^2 + xy = x^3 + a4(q) x + a6(q) over F((s)), q a series in the local
// parameter s with v(q) >= 1.  Everything is known modulo s^K.
template <class F>
struct TateCurve {
    using S = LaurentSeries<F>;
    S q, a4, a6, s1;
    long K = 0;

    static TateCurve make(const S& q_in, long K) {
        if (K < 1) fail(Errc::InvalidArgument, "truncation must be positive");
        if (q_in.is_zero() || q_in.valuation() < 1) fail(Errc::InvalidArgument, "Tate parameter needs v(q) > 0");
        TateCurve E;
        E.K = K;
        E.q = q_in.truncate(K);
        long terms = K / E.q.valuation() + 1;
        E.a4 = compose(detail::lift_coefficients<F>(a4_coefficients(terms)), E.q).truncate(K);
        E.a6 = compose(detail::lift_coefficients<F>(a6_coefficients(terms)), E.q).truncate(K);
        E.s1 = compose(detail::lift_coefficients<F>(divisor_sums(1, terms)), E.q).truncate(K);
        return E;
    }
    static TateCurve standard(long K) { return make(S::monomial(F(Rational(1)), 1), K); }

    // y^2 + xy - x^3 - a4 x - a6
    S equation(const S& x, const S& y) const { return y * y + x * y - x * x * x - a4 * x - a6; }
};

template <class F>
struct TateCoords {
    LaurentSeries<F> x, y;
};

// The representative u q^{-k} with 0 <= v < v(q).
template <class F>
LaurentSeries<F> normalize_unit(const LaurentSeries<F>& u, const TateCurve<F>& E) {
    if (u.is_zero()) fail(Errc::ZeroSeries, "u must be nonzero");
    long vq = E.q.valuation();
    long k = u.valuation() >= 0 ? u.valuation() / vq : -((-u.valuation() + vq - 1) / vq);
    if (k == 0) return u;
    return u * pow(E.q, -k);
}

namespace detail {
// w/(1-w)^2 and w^2/(1-w)^3
template <class F>
LaurentSeries<F> tate_x_term(const LaurentSeries<F>& w) {
    using S = LaurentSeries<F>;
    S d = (S::constant(F(Rational(1))) - w).inverse();
    return w * d * d;
}
template <class F>
LaurentSeries<F> tate_y_term(const LaurentSeries<F>& w) {
    using S = LaurentSeries<F>;
    S d = (S::constant(F(Rational(1))) - w).inverse();
    return w * w * d * d * d;
}
}  // namespace detail

// phi(u) = (sum_n X(q^n u) - 2 s1, sum_n Y(q^n u) + s1) with X, Y the
// terms above and n over Z; the n < 0 half is rewritten through u^{-1}.
template <class F>
TateCoords<F> tate_phi(const LaurentSeries<F>& u_in, const TateCurve<F>& E) {
    using S = LaurentSeries<F>;
    S u = normalize_unit(u_in, E).truncate(E.K);
    if ((u - S::constant(F(Rational(1)))).is_zero()) fail(Errc::KernelElement, "u lies in q^Z to the truncation");
    S ui = u.inverse();
    S x = detail::tate_x_term(u) - F(Rational(2)) * E.s1;
    S y = detail::tate_y_term(u) + E.s1;
    long vq = E.q.valuation(), vu = u.valuation();
    S qn = E.q;
    for (long n = 1; n * vq - vu < E.K; ++n) {
        S w1 = qn * u, w2 = qn * ui;
        x = x + detail::tate_x_term(w1) + detail::tate_x_term(w2);
        // Y(1/w) = -w/(1-w)^3
        y = y + detail::tate_y_term(w1) - detail::tate_x_term(w2) * (S::constant(F(Rational(1))) - w2).inverse();
        qn = qn * E.q;
    }
    return {x.truncate(E.K), y.truncate(E.K)};
}

enum class ReductionKind { NonSingular, SingularPoint, IdentityReduction };

template <class F>
struct PointReduction {
    ReductionKind kind;
    F x, y;  // meaningful for NonSingular and SingularPoint
};

// Reduction of phi(u) to y^2 + xy = x^3 for a unit u (v(u) = 0).
template <class F>
PointReduction<F> reduce_point(const LaurentSeries<F>& u, const TateCurve<F>& E) {
    using S = LaurentSeries<F>;
    if (u.is_zero() || u.valuation() != 0) fail(Errc::NotNormalized, "reduce_point needs v(u) = 0");
    if ((u.truncate(E.K) - S::constant(F(Rational(1)))).is_zero()) return {ReductionKind::IdentityReduction, F(), F()};
    auto P = tate_phi(u, E);
    if (P.x.valuation() < 0) return {ReductionKind::IdentityReduction, F(), F()};
    if (P.x.precision() < 1 || P.y.precision() < 1) fail(Errc::PrecisionLoss, "no significant terms left");
    F xb = P.x.coeff(0), yb = P.y.coeff(0);
    bool singular = is_zero(xb) && is_zero(yb);
    return {singular ? ReductionKind::SingularPoint : ReductionKind::NonSingular, xb, yb};
}

}  // namespace ect
