#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "ect/arith/rational.hpp"
#include "ect/errors.hpp"

namespace ect {

namespace detail {
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

// Truncated Laurent series sum c_k q^k known modulo q^prec.  Exact series
// (polynomials times a power of q) carry prec = kExact.  Zero truncated at
// q^N is a legal value with no stored coefficients and valuation N.
template <class F>
class LaurentSeries {
public:
    static constexpr long kExact = LONG_MAX / 8;

    LaurentSeries() = default;  // exact zero

    static LaurentSeries exact(long v, std::vector<F> c) { return make(v, std::move(c), kExact); }
    static LaurentSeries monomial(const F& c, long k) { return exact(k, {c}); }
    static LaurentSeries constant(const F& c) { return exact(0, {c}); }
    // K retained terms starting at q^v: known modulo q^{v+K}.
    static LaurentSeries truncated(long v, std::vector<F> c, long K) {
        if (K < 1) fail(Errc::InvalidArgument, "truncation must retain at least one term");
        c.resize(static_cast<size_t>(std::min<long>(K, static_cast<long>(c.size()))));
        return make(v, std::move(c), v + K);
    }
    static LaurentSeries zero(long prec) { return make(prec, {}, prec); }

    bool is_exact() const { return prec_ >= kExact / 2; }
    bool is_zero() const { return c_.empty(); }
    long valuation() const { return c_.empty() ? prec_ : val_; }
    long precision() const { return prec_; }  // absolute
    long relative_precision() const { return is_exact() ? kExact : prec_ - valuation(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const {
        if (c_.empty()) fail(Errc::ZeroSeries, "leading coefficient of a zero series");
        return c_.front();
    }
    F coeff(long k) const {
        if (k >= prec_) fail(Errc::InvalidArgument, "coefficient beyond the truncation");
        if (c_.empty() || k < val_ || k - val_ >= static_cast<long>(c_.size())) return F();
        return c_[static_cast<size_t>(k - val_)];
    }

    LaurentSeries truncate(long prec) const {
        if (prec >= prec_) return *this;
        std::vector<F> c;
        for (size_t i = 0; i < c_.size() && val_ + static_cast<long>(i) < prec; ++i) c.push_back(c_[i]);
        return make(c_.empty() ? prec : val_, std::move(c), prec);
    }
    LaurentSeries truncate_relative(long K) const {
        if (c_.empty()) return *this;
        return truncate(val_ + K);
    }
    LaurentSeries shift(long k) const {  // times q^k
        if (c_.empty()) return is_exact() ? *this : zero(prec_ + k);
        return make(val_ + k, c_, is_exact() ? kExact : prec_ + k);
    }

    LaurentSeries operator-() const {
        LaurentSeries r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return a.add(b, false); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a.add(b, true); }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.c_.empty() || b.c_.empty()) {
            long p = std::min(sum(a.prec_, b.valuation()), sum(b.prec_, a.valuation()));
            return zero_or_exact(p);
        }
        long v = a.val_ + b.val_;
        long rel = std::min(a.relative_precision(), b.relative_precision());
        long N = rel >= kExact / 2 ? kExact : v + rel;
        size_t n = a.c_.size() + b.c_.size() - 1;
        if (N < kExact / 2) n = std::min<size_t>(n, static_cast<size_t>(N - v));
        std::vector<F> c(n);
        for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return make(v, std::move(c), N);
    }
    friend LaurentSeries operator*(const F& s, const LaurentSeries& a) {
        LaurentSeries r(a);
        for (auto& x : r.c_) x = s * x;
        return make(r.val_, std::move(r.c_), r.prec_);
    }
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
        long rel = a.relative_precision();
        return a * b.inverse(rel >= kExact / 2 ? 0 : rel);
    }
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    // Inverse.  An exact series with more than one term needs a relative
    // precision for its (infinite) inverse; pass it as rel_if_exact.
    LaurentSeries inverse(long rel_if_exact = 0) const {
        if (c_.empty()) fail(Errc::ZeroSeries, "inverse of a series that is zero to its truncation");
        long rel = relative_precision();
        if (rel >= kExact / 2) {
            if (c_.size() == 1) return monomial(F(Rational(1)) / c_[0], -val_);
            if (rel_if_exact <= 0)
                fail(Errc::InvalidArgument, "inverse of an exact series needs a truncation");
            rel = rel_if_exact;
        }
        std::vector<F> b(static_cast<size_t>(rel));
        const F inv0 = F(Rational(1)) / c_[0];
        b[0] = inv0;
        for (long k = 1; k < rel; ++k) {
            F acc{};
            for (long j = 1; j <= k && j < static_cast<long>(c_.size()); ++j)
                acc += c_[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
            b[static_cast<size_t>(k)] = -(acc * inv0);
        }
        return make(-val_, std::move(b), -val_ + rel);
    }

    // Coefficientwise agreement below q^upto; both must be known that far.
    bool agrees_with(const LaurentSeries& o, long upto) const {
        if (prec_ < upto || o.prec_ < upto) return false;
        long lo = std::min(valuation(), o.valuation());
        for (long k = lo; k < upto; ++k)
            if (coeff(k) != o.coeff(k)) return false;
        return true;
    }
    // Zero modulo q^upto.
    bool vanishes_to(long upto) const {
        if (prec_ < upto) return false;
        return c_.empty() || val_ >= upto;
    }

    template <class G, class Fn>
    LaurentSeries<G> map(Fn fn) const {
        std::vector<G> c;
        for (const auto& x : c_) c.push_back(fn(x));
        if (c_.empty()) return is_exact() ? LaurentSeries<G>() : LaurentSeries<G>::zero(prec_);
        if (is_exact()) return LaurentSeries<G>::exact(val_, std::move(c));
        return LaurentSeries<G>::truncated(val_, std::move(c), prec_ - val_);
    }

private:
    static long sum(long a, long b) {
        if (a >= kExact / 2 || b >= kExact / 2) return kExact;
        return a + b;
    }
    static LaurentSeries zero_or_exact(long p) {
        if (p >= kExact / 2) return LaurentSeries();
        return zero(p);
    }
    static LaurentSeries make(long v, std::vector<F> c, long prec) {
        LaurentSeries s;
        s.prec_ = prec >= kExact / 2 ? kExact : prec;
        size_t lead = 0;
        while (lead < c.size() && detail::coeff_is_zero(c[lead])) ++lead;
        size_t end = c.size();
        while (end > lead && detail::coeff_is_zero(c[end - 1])) --end;
        if (lead == end) {
            s.val_ = s.prec_;
            return s;
        }
        s.val_ = v + static_cast<long>(lead);
        if (s.val_ >= s.prec_) {
            s.val_ = s.prec_;
            return s;
        }
        s.c_.assign(c.begin() + static_cast<long>(lead), c.begin() + static_cast<long>(end));
        if (s.prec_ < kExact / 2 && s.val_ + static_cast<long>(s.c_.size()) > s.prec_)
            s.c_.resize(static_cast<size_t>(s.prec_ - s.val_));
        return s;
    }
    LaurentSeries add(const LaurentSeries& b, bool negate) const {
        long N = std::min(prec_, b.prec_);
        if (c_.empty() && b.c_.empty()) return zero_or_exact(N);
        long lo = std::min(valuation(), b.valuation());
        long hi_a = c_.empty() ? lo : val_ + static_cast<long>(c_.size());
        long hi_b = b.c_.empty() ? lo : b.val_ + static_cast<long>(b.c_.size());
        long hi = std::max(hi_a, hi_b);
        if (N < kExact / 2) hi = std::min(hi, N);
        if (hi <= lo) return zero_or_exact(N);
        std::vector<F> c(static_cast<size_t>(hi - lo));
        for (size_t i = 0; i < c_.size(); ++i) {
            long k = val_ + static_cast<long>(i);
            if (k < hi) c[static_cast<size_t>(k - lo)] += c_[i];
        }
        for (size_t i = 0; i < b.c_.size(); ++i) {
            long k = b.val_ + static_cast<long>(i);
            if (k < hi) {
                if (negate)
                    c[static_cast<size_t>(k - lo)] -= b.c_[i];
                else
                    c[static_cast<size_t>(k - lo)] += b.c_[i];
            }
        }
        return make(lo, std::move(c), N);
    }

    long val_ = kExact;
    std::vector<F> c_;
    long prec_ = kExact;
};

template <class F>
LaurentSeries<F> series_invert(const LaurentSeries<F>& s) {
    return s.inverse();
}

template <class F>
LaurentSeries<F> pow(const LaurentSeries<F>& s, long e) {
    if (e < 0) return pow(s.inverse(), -e);
    LaurentSeries<F> r = LaurentSeries<F>::constant(F(Rational(1))), b = s;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

// f(s) = sum_k f_k s^k for a power series f given by its first coefficients
// and s of positive valuation; known modulo s^{f.size()}.
template <class F>
LaurentSeries<F> compose(const std::vector<F>& f, const LaurentSeries<F>& s) {
    if (s.valuation() < 1) fail(Errc::InvalidArgument, "composition needs positive valuation");
    if (f.empty()) return LaurentSeries<F>();
    LaurentSeries<F> acc = LaurentSeries<F>::constant(f.back());
    for (size_t k = f.size() - 1; k-- > 0;) acc = acc * s + LaurentSeries<F>::constant(f[k]);
    long cap = static_cast<long>(f.size()) * s.valuation();
    return acc.truncate(cap);
}

template <class F>
std::string to_string(const LaurentSeries<F>& s, const std::string& var = "q") {
    std::string out;
    for (size_t i = 0; i < s.coeffs().size(); ++i) {
        const F& c = s.coeffs()[i];
        if (is_zero(c)) continue;
        long k = s.valuation() + static_cast<long>(i);
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (k != 0) out += "*" + var + "^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    if (!s.is_exact()) out += " + O(" + var + "^" + std::to_string(s.precision()) + ")";
    return out;
}

}  // namespace ect
