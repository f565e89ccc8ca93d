#pragma once

#include <mpfr.h>

#include <string>

#include "ect/arith/rational.hpp"

namespace ect {

// Decimal digits to working bits, with guard bits.
mpfr_prec_t digits_to_bits(long digits, long guard_digits = 0);

// Owning wrapper over mpfr_t.  Binary operations run at the larger of the
// operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(long v, mpfr_prec_t bits);
    BigFloat(double v, mpfr_prec_t bits);
    BigFloat(const Rational& v, mpfr_prec_t bits);
    BigFloat(const Integer& v, mpfr_prec_t bits);
    BigFloat(const std::string& decimal, mpfr_prec_t bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat pi(mpfr_prec_t bits);

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }
    BigFloat at(mpfr_prec_t bits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long round_to_long() const;
    Integer round_to_integer() const;
    // Fixed-point decimal with `digits` significant digits.
    std::string str(long digits) const;
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    // floor(log2|x|), very negative for 0
    long exponent() const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

private:
    void widen_to(mpfr_prec_t bits);
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat floor(const BigFloat& x);
BigFloat pow2(long e, mpfr_prec_t bits);  // 2^e
BigFloat pow10(long e, mpfr_prec_t bits);

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(r.bits()) {}
    static BigComplex from_rational(const Rational& r, mpfr_prec_t bits) { return BigComplex(BigFloat(r, bits)); }
    static BigComplex i(mpfr_prec_t bits) { return {BigFloat(bits), BigFloat(1L, bits)}; }

    mpfr_prec_t bits() const { return std::max(re.bits(), im.bits()); }
    BigComplex at(mpfr_prec_t bits) const { return {re.at(bits), im.at(bits)}; }
    BigComplex conj() const { return {re, -im}; }
    BigFloat norm2() const { return re * re + im * im; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
};

BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);  // principal branch
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex pow(const BigComplex& z, long n);
std::string to_string(const BigComplex& z, long digits);

}  // namespace ect
