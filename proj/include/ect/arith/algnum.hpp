#pragma once

#include <memory>
#include <string>

#include "ect/arith/poly_q.hpp"

namespace ect {

// Q[x]/(g) for a monic irreducible g.  Used as residue field of a place of
// degree > 1 and for exact arithmetic with roots of irreducible factors that
// do not lie in a quadratic tower.
struct NumberFieldCtx {
    QPoly modulus;
    std::string var = "theta";
};
using NumberFieldPtr = std::shared_ptr<const NumberFieldCtx>;

NumberFieldPtr make_number_field(const QPoly& g, std::string var = "theta");

class AlgNum {
public:
    AlgNum() = default;
    AlgNum(const Rational& c) : v_(c) {}  // NOLINT
    AlgNum(NumberFieldPtr ctx, QPoly v);

    static AlgNum generator(const NumberFieldPtr& ctx);

    const QPoly& value() const { return v_; }
    const NumberFieldPtr& ctx() const { return ctx_; }
    // True when the value is a rational constant.
    bool is_rational() const { return v_.degree() <= 0; }
    Rational rational_value() const;

    AlgNum operator-() const;
    AlgNum& operator+=(const AlgNum& o);
    AlgNum& operator-=(const AlgNum& o);
    AlgNum& operator*=(const AlgNum& o);
    AlgNum& operator/=(const AlgNum& o);
    friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
    friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
    friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
    friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
    friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.v_ == b.v_; }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    AlgNum inverse() const;
    std::string str() const;

private:
    void adopt(const AlgNum& o);
    NumberFieldPtr ctx_;
    QPoly v_;
};

inline bool is_zero(const AlgNum& a) { return a.value().zero(); }

}  // namespace ect
