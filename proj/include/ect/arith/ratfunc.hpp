#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "ect/arith/algnum.hpp"
#include "ect/arith/poly_q.hpp"

namespace ect {

// Element of Q(t) in canonical form: coprime, monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    RatFunc(const QPoly& p) : num_(p), den_(Rational(1)) {}     // NOLINT
    RatFunc(const QPoly& num, const QPoly& den);

    static RatFunc t() { return RatFunc(QPoly::x()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    Rational eval(const Rational& t0) const;  // errors at a pole

private:
    struct Canonical {};
    RatFunc(QPoly n, QPoly d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}
    QPoly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.num().zero(); }

std::string to_string(const RatFunc& f, const std::string& var = "t");
// Parses expressions in one variable using + - * / ^ (integer exponents),
// parentheses and rational literals.
RatFunc parse_ratfunc(std::string_view s, char var = 't');

constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

class Place {
public:
    static Place finite(const QPoly& p);  // p must be irreducible; made monic
    static Place infinity() { return Place(); }

    bool is_infinite() const { return inf_; }
    const QPoly& poly() const { return p_; }
    int degree() const { return inf_ ? 1 : p_.degree(); }
    // Uniformizer: p(t) at a finite place, 1/t at infinity.
    RatFunc uniformizer() const;
    // Residue field: Q for degree one and infinity, Q[t]/(p) otherwise.
    const NumberFieldPtr& residue_field() const { return field_; }
    std::string str(const std::string& var = "t") const;

    // finite places by polynomial order, then infinity
    friend bool operator<(const Place& a, const Place& b);
    friend bool operator==(const Place& a, const Place& b) {
        return a.inf_ == b.inf_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

private:
    Place() : inf_(true) {}
    bool inf_;
    QPoly p_;
    NumberFieldPtr field_;
};

long valuation(const QPoly& f, const Place& v);
long valuation(const RatFunc& f, const Place& v);

// Image in the residue field of v of an element with valuation >= 0.
AlgNum reduce_at(const RatFunc& f, const Place& v);
// Residue of f / pi^valuation(f): the leading coefficient of f at v.
AlgNum leading_coefficient(const RatFunc& f, const Place& v);

// All places where f has nonzero valuation (f nonzero), canonical order.
std::vector<Place> support(const RatFunc& f);
// Finite places dividing p, plus nothing else.
std::vector<Place> places_dividing(const QPoly& p);

}  // namespace ect
