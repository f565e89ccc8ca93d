#pragma once

#include <vector>

#include "ect/arith/poly.hpp"
#include "ect/ec/curve.hpp"

namespace ect {

namespace detail {
template <class R>
struct RingConst {
    static R make(const Rational& q) { return R(q); }
};
template <class S>
struct RingConst<Poly<S>> {
    static Poly<S> make(const Rational& q) { return Poly<S>(RingConst<S>::make(q)); }
};
}  // namespace detail

template <class R>
R ring_const(const Rational& q) {
    return detail::RingConst<R>::make(q);
}

// f_n for n = 0..nmax on y^2 = x^3 + ax + b, where f_n = psi_n for odd n and
// f_n = psi_n / y for even n.  R is any Q-algebra holding x, a and b: the
// field itself for evaluation at a point, F[x] for the polynomials, or
// a polynomial ring in the curve parameters.
template <class R>
std::vector<R> division_values(int nmax, const R& x, const R& a, const R& b) {
    auto k = [](long v) { return ring_const<R>(Rational(v)); };
    std::vector<R> f(std::max(nmax, 4) + 1);
    R x2 = x * x, a2 = a * a;
    R cubic = x2 * x + a * x + b;
    R cubic2 = cubic * cubic;
    f[0] = R();
    f[1] = k(1);
    f[2] = k(2);
    f[3] = k(3) * x2 * x2 + k(6) * a * x2 + k(12) * b * x - a2;
    f[4] = k(4) * (x2 * x2 * x2 + k(5) * a * x2 * x2 + k(20) * b * x2 * x - k(5) * a2 * x2 - k(4) * a * b * x -
                   k(8) * b * b - a2 * a);
    R half = ring_const<R>(Rational(1, 2));
    for (int n = 5; n <= nmax; ++n) {
        int m = n / 2;
        if (n % 2) {
            R u = f[m + 2] * f[m] * f[m] * f[m];
            R v = f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
            f[n] = m % 2 == 0 ? R(cubic2 * u - v) : R(u - cubic2 * v);
        } else {
            f[n] = half * f[m] *
                   (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
        }
    }
    f.resize(nmax + 1);
    return f;
}

// The x-only division polynomial: psi_N for odd N, and
// (x^3 + ax + b) psi_N / (2y) for even N, so it vanishes exactly at the
// x-coordinates of nonzero points killed by N.
template <class R>
R x_only_division(int n, const std::vector<R>& f, const R& cubic) {
    if (n % 2) return f[n];
    return ring_const<R>(Rational(1, 2)) * cubic * f[n];
}

template <class F>
Poly<F> division_poly(int n, const F& a, const F& b) {
    if (n < 1) fail(Errc::InvalidArgument, "division polynomial index must be positive");
    using P = Poly<F>;
    P x = P::x(), pa(a), pb(b);
    auto f = division_values<P>(n, x, pa, pb);
    return x_only_division<P>(n, f, x * x * x + pa * x + pb);
}

// x([m]P) from x(P), for points with [m]P != O.
template <class F>
F multiple_x(int m, const F& x, const WeierstrassCurve<F>& E) {
    if (m < 1) fail(Errc::InvalidArgument, "multiplier must be positive");
    if (m == 1) return x;
    auto f = division_values<F>(m + 1, x, E.a, E.b);
    F cubic = E.rhs(x);
    F fm2 = f[m] * f[m];
    if (is_zero(fm2) || (m % 2 == 0 && is_zero(cubic))) fail(Errc::KernelElement, "[m]P is the identity");
    if (m % 2) return x - F(cubic * f[m - 1] * f[m + 1]) / fm2;
    return x - F(f[m - 1] * f[m + 1]) / F(cubic * fm2);
}

}  // namespace ect
