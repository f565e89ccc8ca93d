#include "ect/arith/ratfunc.hpp"

#include <algorithm>
#include <cctype>

namespace ect {

RatFunc::RatFunc(const QPoly& num, const QPoly& den) {
    if (den.zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    if (num.zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = gcd(num, den);
    QPoly n = g.degree() > 0 ? exact_div(num, g) : num;
    QPoly d = g.degree() > 0 ? exact_div(den, g) : den;
    Rational c = d.lc();
    if (c != 1) {
        Rational ic = 1 / c;
        n = n.scaled(ic);
        d = d.scaled(ic);
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_)
        *this = RatFunc(num_ + o.num_, den_);
    else
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}
RatFunc& RatFunc::operator-=(const RatFunc& o) {
    if (den_ == o.den_)
        *this = RatFunc(num_ - o.num_, den_);
    else
        *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}
RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}
RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.num_.zero()) fail(Errc::DivisionByZero, "division by zero rational function");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

Rational RatFunc::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (sgn(d) == 0) fail(Errc::DivisionByZero, "evaluation at a pole");
    return num_.eval(t0) / d;
}

std::string to_string(const RatFunc& f, const std::string& var) {
    if (f.den().degree() == 0) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

namespace {

class Parser {
public:
    Parser(std::string_view s, char var) : s_(s), var_(var) {}
    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (i_ != s_.size()) error("trailing input");
        return r;
    }

private:
    [[noreturn]] void error(const std::string& m) {
        fail(Errc::InvalidArgument, "parse error in '" + std::string(s_) + "' at " +
                                        std::to_string(i_) + ": " + m);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (peek('+')) {
                ++i_;
                r += term();
            } else if (peek('-')) {
                ++i_;
                r -= term();
            } else {
                return r;
            }
        }
    }
    bool starts_factor() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return c == '(' || c == var_ || std::isdigit(static_cast<unsigned char>(c));
    }
    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (peek('*')) {
                ++i_;
                r *= unary();
            } else if (peek('/')) {
                ++i_;
                r /= unary();
            } else if (starts_factor()) {
                r *= power();
            } else {
                return r;
            }
        }
    }
    RatFunc unary() {
        if (peek('-')) {
            ++i_;
            return -unary();
        }
        if (peek('+')) {
            ++i_;
            return unary();
        }
        return power();
    }
    RatFunc power() {
        RatFunc b = primary();
        if (peek('^')) {
            ++i_;
            skip();
            bool neg = false;
            if (i_ < s_.size() && s_[i_] == '-') {
                neg = true;
                ++i_;
            }
            size_t j = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (j == i_) error("expected integer exponent");
            long e = std::stol(std::string(s_.substr(j, i_ - j)));
            RatFunc r(Rational(1));
            for (long k = 0; k < e; ++k) r *= b;
            return neg ? RatFunc(Rational(1)) / r : r;
        }
        return b;
    }
    RatFunc primary() {
        skip();
        if (i_ >= s_.size()) error("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            RatFunc r = expr();
            if (!peek(')')) error("expected ')'");
            ++i_;
            return r;
        }
        if (c == var_) {
            ++i_;
            return RatFunc::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return RatFunc(Rational(Integer(std::string(s_.substr(j, i_ - j)))));
        }
        error(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    char var_;
    size_t i_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view s, char var) { return Parser(s, var).parse(); }

Place Place::finite(const QPoly& p) {
    if (p.degree() < 1) fail(Errc::InvalidArgument, "place polynomial must be non-constant");
    Place v;
    v.inf_ = false;
    v.p_ = monic(p);
    if (v.p_.degree() > 1) v.field_ = make_number_field(v.p_, "theta");
    return v;
}

RatFunc Place::uniformizer() const {
    if (inf_) return RatFunc(QPoly(Rational(1)), QPoly::x());
    return RatFunc(p_);
}

std::string Place::str(const std::string& var) const {
    if (inf_) return "Infinity";
    return "(" + to_string(p_, var) + ")";
}

bool operator<(const Place& a, const Place& b) {
    if (a.inf_ != b.inf_) return !a.inf_;
    if (a.inf_) return false;
    return poly_less(a.p_, b.p_);
}

long valuation(const QPoly& f, const Place& v) {
    if (f.zero()) return kInfiniteValuation;
    if (v.is_infinite()) return -static_cast<long>(f.degree());
    long k = 0;
    QPoly g = f;
    for (;;) {
        auto [q, r] = divmod(g, v.poly());
        if (!r.zero()) return k;
        g = std::move(q);
        ++k;
    }
}

long valuation(const RatFunc& f, const Place& v) {
    if (is_zero(f)) return kInfiniteValuation;
    return valuation(f.num(), v) - valuation(f.den(), v);
}

AlgNum reduce_at(const RatFunc& f, const Place& v) {
    long k = valuation(f, v);
    if (k < 0) fail(Errc::InvalidArgument, "reduction of an element with a pole at " + v.str());
    if (k > 0) return AlgNum(v.residue_field(), QPoly());
    if (v.is_infinite()) {
        // equal degrees
        return AlgNum(Rational(f.num().lc() / f.den().lc()));
    }
    if (v.degree() == 1) {
        Rational root = -v.poly().coeff(0);
        return AlgNum(f.eval(root));
    }
    AlgNum n(v.residue_field(), f.num()), d(v.residue_field(), f.den());
    return n / d;
}

AlgNum leading_coefficient(const RatFunc& f, const Place& v) {
    if (is_zero(f)) fail(Errc::InvalidArgument, "leading coefficient of zero");
    long k = valuation(f, v);
    RatFunc pi = v.uniformizer();
    RatFunc g = f;
    RatFunc pk(Rational(1));
    for (long i = 0; i < std::labs(k); ++i) pk *= pi;
    if (k > 0) g /= pk;
    if (k < 0) g *= pk;
    return reduce_at(g, v);
}

std::vector<Place> places_dividing(const QPoly& p) {
    std::vector<Place> out;
    if (p.degree() <= 0) return out;
    for (const auto& [g, m] : factor(p).factors) out.push_back(Place::finite(g));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Place> support(const RatFunc& f) {
    if (is_zero(f)) fail(Errc::InvalidArgument, "support of zero");
    std::vector<Place> out = places_dividing(f.num());
    for (auto& v : places_dividing(f.den())) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (valuation(f, Place::infinity()) != 0) out.push_back(Place::infinity());
    return out;
}

}  // namespace ect
