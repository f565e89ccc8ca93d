#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ect/arith/rational.hpp"
#include "ect/errors.hpp"

namespace ect {

// Dense univariate polynomial over a commutative ring R.  R must be default
// constructible to zero and provide is_zero(R) by ADL.
template <class R>
class Poly {
public:
    using coeff_type = R;

    Poly() = default;
    Poly(const R& c) {  // NOLINT: constants convert implicitly
        if (!is_zero(c)) c_.push_back(c);
    }
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(const R& c, int k) {
        if (is_zero(c)) return {};
        std::vector<R> v(static_cast<size_t>(k) + 1);
        v[static_cast<size_t>(k)] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    size_t size() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(int k) const {
        return (k >= 0 && static_cast<size_t>(k) < c_.size()) ? c_[static_cast<size_t>(k)] : R();
    }
    const R& operator[](size_t k) const { return c_[k]; }
    const R& lc() const {
        if (c_.empty()) fail(Errc::InvalidArgument, "leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly scaled(const R& s) const {
        Poly r(*this);
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }
    Poly shifted(int k) const {  // times x^k
        if (zero()) return {};
        std::vector<R> v(static_cast<size_t>(k));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Horner evaluation in any algebra S receiving R by construction.
    template <class S>
    S eval(const S& x) const {
        S acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
        return acc;
    }
    template <class S, class Conv>
    S eval(const S& x, Conv conv) const {
        S acc = conv(R());
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + conv(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * R(Rational(static_cast<long>(i)));
        return Poly(std::move(v));
    }

    template <class F>
    auto map(F f) const -> Poly<decltype(f(std::declval<R>()))> {
        using S = decltype(f(std::declval<R>()));
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(f(c));
        return Poly<S>(std::move(v));
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.zero();
}

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned long e) {
    Poly<R> r(R(1)), b(p);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
    Poly<R> acc;
    for (size_t i = p.size(); i-- > 0;) acc = acc * q + Poly<R>(p[i]);
    return acc;
}

// ---- operations requiring R to be a field ---------------------------------

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const F inv_lc = F(Rational(1)) / b.lc();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        F c = r[static_cast<size_t>(i)] * inv_lc;
        if (is_zero(c)) continue;
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= c * b[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

// Exact quotient; errors when b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.zero()) fail(Errc::InvalidArgument, "inexact polynomial division");
    return q;
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
    if (p.zero()) return p;
    return p.scaled(F(Rational(1)) / p.lc());
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Returns (g, s, t) with s a + t b = g, g monic.
template <class F>
struct ExtGcd {
    Poly<F> g, s, t;
};
template <class F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b, s0(F(Rational(1))), s1, t0, t1(F(Rational(1)));
    while (!r1.zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.zero()) return {r0, s0, t0};
    F inv = F(Rational(1)) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Yun: p = c * prod_k P_k^k with P_k monic square-free and pairwise coprime.
// Returns P_1, P_2, ... (possibly with trailing ones).
template <class F>
std::vector<Poly<F>> squarefree_decomposition(const Poly<F>& p) {
    std::vector<Poly<F>> out;
    if (p.degree() <= 0) return out;
    Poly<F> f = monic(p);
    Poly<F> a = gcd(f, f.derivative());
    Poly<F> b = exact_div(f, a);
    Poly<F> c = exact_div(f.derivative(), a);
    Poly<F> d = c - b.derivative();
    do {
        Poly<F> g = gcd(b, d);
        out.push_back(g);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    } while (b.degree() > 0);
    return out;
}

template <class F>
F pow_field(const F& x, long e) {
    F r(Rational(1)), b(x);
    if (e < 0) {
        b = F(Rational(1)) / b;
        e = -e;
    }
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

// Resultant over a field by the Euclidean remainder sequence.
template <class F>
F resultant(const Poly<F>& a, const Poly<F>& b) {
    if (a.zero() || b.zero()) return F();
    if (a.degree() == 0) return pow_field(a.lc(), b.degree());
    if (b.degree() == 0) return pow_field(b.lc(), a.degree());
    Poly<F> r = a % b;
    F sign = ((a.degree() * b.degree()) % 2) ? F(Rational(-1)) : F(Rational(1));
    if (r.zero()) return F();
    return sign * pow_field(b.lc(), a.degree() - r.degree()) * resultant(b, r);
}

}  // namespace ect
