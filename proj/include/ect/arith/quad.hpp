#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ect/arith/rational.hpp"
#include "ect/arith/ratfunc.hpp"
#include "ect/errors.hpp"

namespace ect {

template <class Base>
struct RadicandTraits;

// Radicands over Q: square-free integers; sqrt(m) of a negative m is the
// principal value i*sqrt(|m|).
template <>
struct RadicandTraits<Rational> {
    using Rad = Integer;
    static Rad one() { return 1; }
    static bool is_one(const Rad& r) { return r == 1; }
    static std::pair<Rational, Rad> mul(const Rad& m, const Rad& n) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
        Integer k = (m / g) * (n / g);
        Rational c(g);
        if (sgn(m) < 0 && sgn(n) < 0) c = -c;
        return {c, k};
    }
    // x = root^2 * rad
    static std::pair<Rational, Rad> split(const Rational& x) {
        auto s = square_split(x);
        return {s.root, s.kernel};
    }
    static bool less(const Rad& a, const Rad& b) {
        int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
        if (c != 0) return c < 0;
        return a > b;
    }
    static Rational embed(const Rad& r) { return Rational(r); }
    static std::string str(const Rad& r) { return r.get_str(); }
};

// Radicands over Q(t): s * m with s a square-free integer and m a monic
// square-free polynomial.
struct FFRadicand {
    Integer s = 1;
    QPoly m = QPoly(Rational(1));
    friend bool operator==(const FFRadicand& a, const FFRadicand& b) { return a.s == b.s && a.m == b.m; }
    friend bool operator!=(const FFRadicand& a, const FFRadicand& b) { return !(a == b); }
};

template <>
struct RadicandTraits<RatFunc> {
    using Rad = FFRadicand;
    static Rad one() { return {}; }
    static bool is_one(const Rad& r) { return r.s == 1 && r.m.degree() == 0; }
    static std::pair<RatFunc, Rad> mul(const Rad& a, const Rad& b) {
        auto [c, s] = RadicandTraits<Rational>::mul(a.s, b.s);
        QPoly g = gcd(a.m, b.m);
        QPoly m = exact_div(a.m * b.m, g * g);
        return {RatFunc(g.scaled(c)), Rad{s, m}};
    }
    static std::pair<RatFunc, Rad> split(const RatFunc& x);
    static bool less(const Rad& a, const Rad& b) {
        if (a.m != b.m) return poly_less(a.m, b.m);
        return RadicandTraits<Rational>::less(a.s, b.s);
    }
    static RatFunc embed(const Rad& r) { return RatFunc(r.m.scaled(Rational(r.s))); }
    static std::string str(const Rad& r);
};

// Element of a quadratic tower over Base: a finite sum of c_k sqrt(k) over
// radicand classes k.  The radicands present generate a group of rank <= 2.
template <class Base>
class QuadExt {
public:
    using Traits = RadicandTraits<Base>;
    using Rad = typename Traits::Rad;
    using Term = std::pair<Rad, Base>;

    QuadExt() = default;
    QuadExt(const Base& b) {  // NOLINT
        if (!is_zero(b)) terms_.push_back({Traits::one(), b});
    }
    QuadExt(const Rational& r) requires(!std::is_same_v<Base, Rational>) : QuadExt(Base(r)) {}  // NOLINT

    static QuadExt sqrt_of(const Rad& r) { return from_terms({{r, Base(Rational(1))}}); }
    static QuadExt from_terms(std::vector<Term> t) {
        QuadExt x;
        x.terms_ = std::move(t);
        x.normalize();
        return x;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_base() const { return terms_.empty() || (terms_.size() == 1 && Traits::is_one(terms_[0].first)); }
    Base base_part() const {
        for (const auto& [r, c] : terms_)
            if (Traits::is_one(r)) return c;
        return Base();
    }
    Base coeff(const Rad& r) const {
        for (const auto& [k, c] : terms_)
            if (k == r) return c;
        return Base();
    }
    std::vector<Rad> support() const {
        std::vector<Rad> s;
        for (const auto& t : terms_) s.push_back(t.first);
        return s;
    }

    QuadExt operator-() const {
        QuadExt r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    QuadExt& operator+=(const QuadExt& o) {
        for (const auto& t : o.terms_) accumulate(terms_, t.first, t.second);
        normalize();
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        for (const auto& t : o.terms_) accumulate(terms_, t.first, Base(-t.second));
        normalize();
        return *this;
    }
    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        std::vector<Term> acc;
        for (const auto& [ra, ca] : a.terms_)
            for (const auto& [rb, cb] : b.terms_) {
                auto [c, k] = Traits::mul(ra, rb);
                accumulate(acc, k, Base(c * ca * cb));
            }
        return from_terms(std::move(acc));
    }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }
    friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt inverse() const;

private:
    static void accumulate(std::vector<Term>& v, const Rad& r, const Base& c) {
        for (auto& t : v)
            if (t.first == r) {
                t.second += c;
                return;
            }
        v.push_back({r, c});
    }
    void normalize();

    std::vector<Term> terms_;  // sorted by radicand, nonzero coefficients
};

template <class Base>
bool is_zero(const QuadExt<Base>& x) {
    return x.terms().empty();
}

// The group generated by a set of radicands, with a basis of at most two
// generators.  Each element records its exponent vector over the basis.
template <class Base>
struct TowerGroup {
    using Traits = RadicandTraits<Base>;
    using Rad = typename Traits::Rad;
    std::vector<Rad> gens;
    std::vector<std::pair<Rad, unsigned>> elems;

    explicit TowerGroup(const std::vector<Rad>& rads) {
        elems.push_back({Traits::one(), 0u});
        for (const auto& r : rads) add(r);
    }
    bool contains(const Rad& r) const {
        for (const auto& e : elems)
            if (e.first == r) return true;
        return false;
    }
    unsigned mask_of(const Rad& r) const {
        for (const auto& e : elems)
            if (e.first == r) return e.second;
        fail(Errc::InvalidArgument, "radicand not in tower");
    }
    void add(const Rad& r) {
        if (contains(r)) return;
        if (gens.size() == 2) fail(Errc::TowerDepthExceeded, "quadratic tower deeper than 2");
        gens.push_back(r);
        unsigned bit = 1u << (gens.size() - 1);
        auto cur = elems;
        for (const auto& [e, m] : cur) elems.push_back({Traits::mul(e, r).second, m | bit});
    }
    size_t depth() const { return gens.size(); }
};

template <class Base>
void QuadExt<Base>::normalize() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return is_zero(t.second); }),
                 terms_.end());
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return Traits::less(a.first, b.first); });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return is_zero(t.second); }),
                 merged.end());
    terms_ = std::move(merged);
    if (terms_.size() > 4) fail(Errc::TowerDepthExceeded, "quadratic tower deeper than 2");
    if (terms_.size() > 2) TowerGroup<Base> g(support());
}

// Image under the automorphism with sign s_i on the i-th generator.
template <class Base>
QuadExt<Base> apply_character(const QuadExt<Base>& x, const TowerGroup<Base>& g, unsigned flip_mask) {
    std::vector<typename QuadExt<Base>::Term> t;
    for (const auto& [r, c] : x.terms()) {
        unsigned m = g.mask_of(r) & flip_mask;
        bool neg = __builtin_popcount(m) % 2;
        t.push_back({r, neg ? Base(-c) : c});
    }
    return QuadExt<Base>::from_terms(std::move(t));
}

template <class Base>
QuadExt<Base> QuadExt<Base>::inverse() const {
    if (terms_.empty()) fail(Errc::DivisionByZero, "inverse of zero tower element");
    if (is_base()) return QuadExt(Base(Base(Rational(1)) / terms_[0].second));
    TowerGroup<Base> g(support());
    QuadExt prod(Base(Rational(1)));
    const unsigned full = (1u << g.depth());
    for (unsigned s = 1; s < full; ++s) prod *= apply_character(*this, g, s);
    QuadExt n = *this * prod;
    if (!n.is_base()) fail(Errc::InvalidArgument, "norm computation left the base field");
    return prod * QuadExt(Base(Base(Rational(1)) / n.base_part()));
}

// Conjugation sending sqrt(d) to -sqrt(d) and fixing the other generator of
// the tower of x extended by d.
template <class Base>
QuadExt<Base> conjugate(const QuadExt<Base>& x, const typename RadicandTraits<Base>::Rad& d) {
    std::vector<typename RadicandTraits<Base>::Rad> rads{d};
    for (const auto& r : x.support()) rads.push_back(r);
    TowerGroup<Base> g(rads);
    return apply_character(x, g, 1u);
}

// Product of all conjugates over the base field.
template <class Base>
Base norm(const QuadExt<Base>& x) {
    if (x.is_base()) return x.base_part();
    TowerGroup<Base> g(x.support());
    QuadExt<Base> prod = x;
    for (unsigned s = 1; s < (1u << g.depth()); ++s) prod *= apply_character(x, g, s);
    return prod.base_part();
}

template <class Base>
QuadExt<Base> pow(const QuadExt<Base>& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    QuadExt<Base> r(Base(Rational(1))), b = x;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

namespace detail {

template <class Base>
QuadExt<Base> sqrt_of_base(const Base& b) {
    using T = RadicandTraits<Base>;
    if (is_zero(b)) return {};
    auto [root, rad] = T::split(b);
    if (T::is_one(rad)) return QuadExt<Base>(root);
    return QuadExt<Base>::from_terms({{rad, root}});
}

template <class Base>
bool within(const QuadExt<Base>& s, const std::optional<TowerGroup<Base>>& allowed) {
    if (!allowed) return true;
    for (const auto& r : s.support())
        if (!allowed->contains(r)) return false;
    return true;
}

template <class Base>
std::optional<QuadExt<Base>> sqrt_impl(const QuadExt<Base>& x, const std::optional<TowerGroup<Base>>& allowed) {
    using Q = QuadExt<Base>;
    using T = RadicandTraits<Base>;
    if (is_zero(x)) return Q();
    if (x.is_base()) {
        Q s = sqrt_of_base(x.base_part());
        if (within(s, allowed)) return s;
        return std::nullopt;
    }
    TowerGroup<Base> g(x.support());
    const Base two(Rational(2));
    // x = alpha + beta*sqrt(d) with alpha, beta in the subtower without d.
    const auto d = g.gens.back();
    const unsigned dbit = 1u << (g.depth() - 1);
    Q alpha, beta;
    for (const auto& [r, c] : x.terms()) {
        if (g.mask_of(r) & dbit) {
            auto [cc, k] = T::mul(r, d);  // sqrt(r)sqrt(d) = cc sqrt(k)
            beta += Q::from_terms({{k, Base(c * cc / T::embed(d))}});
        } else {
            alpha += Q::from_terms({{r, c}});
        }
    }
    std::optional<TowerGroup<Base>> sub;
    {
        std::vector<typename T::Rad> gs(g.gens.begin(), g.gens.end() - 1);
        sub.emplace(gs);
    }
    Q sd = Q::sqrt_of(d);
    auto accept = [&](const Q& s) -> std::optional<Q> {
        if (s * s != x || !within(s, allowed)) return std::nullopt;
        return s;
    };
    try {
        if (is_zero(beta)) {
            // x = alpha lies in the subtower; either sqrt(alpha) or v*sqrt(d).
            if (auto u = sqrt_impl(alpha, sub))
                if (auto s = accept(*u)) return s;
            if (auto v = sqrt_impl(Q(alpha / Q(T::embed(d))), sub))
                if (auto s = accept(*v * sd)) return s;
            return std::nullopt;
        }
        Q n2 = alpha * alpha - Q(T::embed(d)) * beta * beta;
        auto n = sqrt_impl(n2, sub);
        if (!n) return std::nullopt;
        for (int sign : {1, -1}) {
            Q t = sign > 0 ? (alpha + *n) : (alpha - *n);
            t = t * Q(Base(Rational(1, 2)));
            if (is_zero(t)) continue;
            std::optional<Q> u = sub->depth() == 0 ? std::optional<Q>(sqrt_of_base(t.base_part()))
                                                   : sqrt_impl(t, sub);
            if (!u) continue;
            Q s = *u + beta * sd / (Q(two) * *u);
            if (auto ok = accept(s)) return ok;
        }
    } catch (const Error& e) {
        if (e.code() != Errc::TowerDepthExceeded) throw;
    }
    return std::nullopt;
}

}  // namespace detail

// s with s^2 = x in the tower of x (extended by one new root if needed).
// When `context` is given, the result together with the context radicands
// must still have depth <= 2.  Throws NotASquare otherwise.
template <class Base>
QuadExt<Base> quad_sqrt(const QuadExt<Base>& x,
                        const std::vector<typename RadicandTraits<Base>::Rad>& context = {}) {
    std::optional<QuadExt<Base>> s;
    try {
        s = detail::sqrt_impl(x, std::optional<TowerGroup<Base>>());
    } catch (const Error& e) {
        if (e.code() != Errc::TowerDepthExceeded) throw;
    }
    if (!s) fail(Errc::NotASquare, "no square root within a depth-2 tower");
    try {
        std::vector<typename RadicandTraits<Base>::Rad> all = context;
        for (const auto& r : s->support()) all.push_back(r);
        TowerGroup<Base> g(all);
    } catch (const Error& e) {
        if (e.code() == Errc::TowerDepthExceeded)
            fail(Errc::NotASquare, "square root would exceed tower depth 2");
        throw;
    }
    return *s;
}

using QuadElem = QuadExt<Rational>;
using FFQuad = QuadExt<RatFunc>;

std::string to_string(const QuadElem& x);
std::string to_string(const FFQuad& x, const std::string& var = "t");

// Canonical generators (d1[, d2]) of the tower generated by the support of
// the given elements and the coordinates of x in the basis 1, sqrt(d1),
// sqrt(d2), sqrt(d1)sqrt(d2).
struct TowerCoords {
    std::vector<Integer> tower;
    std::vector<Rational> coords;
};
std::vector<Integer> canonical_tower(const std::vector<Integer>& rads);
TowerCoords tower_coords(const QuadElem& x, const std::vector<Integer>& tower);
QuadElem from_tower_coords(const std::vector<Integer>& tower, const std::vector<Rational>& coords);

bool is_totally_real(const QuadElem& x);
// Root of unity test for elements of depth <= 2 towers (orders dividing 24
// or 60 are the only possible ones in degree <= 4).
bool is_root_of_unity(const QuadElem& x);

}  // namespace ect
