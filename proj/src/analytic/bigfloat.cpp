#include "ect/analytic/bigfloat.hpp"

#include <cmath>
#include <vector>

#include "ect/errors.hpp"

namespace ect {

mpfr_prec_t digits_to_bits(long digits, long guard_digits) {
    return static_cast<mpfr_prec_t>(std::ceil((digits + guard_digits) * 3.3219280948873623)) + 16;
}

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}
BigFloat::BigFloat(long v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(double v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(const Rational& v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
BigFloat::BigFloat(const Integer& v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        fail(Errc::InvalidArgument, "malformed decimal '" + decimal + "'");
    }
}
BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.bits());
    mpfr_swap(v_, o.v_);
}
BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::at(mpfr_prec_t bits) const {
    BigFloat r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigFloat::round_to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

Integer BigFloat::round_to_integer() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string BigFloat::str(long digits) const {
    if (!is_finite()) return "nan";
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
    return buf.data();
}

long BigFloat::exponent() const {
    if (is_zero()) return -(1L << 40);
    return mpfr_get_exp(v_) - 1;
}

void BigFloat::widen_to(mpfr_prec_t bits) {
    if (bits > this->bits()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}
BigFloat& BigFloat::operator+=(const BigFloat& o) {
    widen_to(o.bits());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
    widen_to(o.bits());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
    widen_to(o.bits());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
    widen_to(o.bits());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

namespace {
template <class Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
    BigFloat r(x.bits());
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}
}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat floor(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_floor(r.get(), x.get());
    return r;
}
BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(std::max(x.bits(), y.bits()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}
BigFloat pow2(long e, mpfr_prec_t bits) {
    BigFloat r(1L, bits);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}
BigFloat pow10(long e, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) {
        BigFloat one(1L, bits);
        return one / r;
    }
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}
BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat d = o.norm2();
    if (d.is_zero()) fail(Errc::DivisionByZero, "complex division by zero");
    BigFloat r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

BigFloat abs(const BigComplex& z) {
    BigFloat r(z.bits());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}
BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex sqrt(const BigComplex& z) {
    mpfr_prec_t b = z.bits();
    if (z.is_zero()) return BigComplex(b);
    BigFloat r = abs(z), half(0.5, b);
    if (z.re.sign() >= 0) {
        BigFloat u = sqrt(half * (r + z.re));
        return {u, z.im / (BigFloat(2L, b) * u)};
    }
    BigFloat v = sqrt(half * (r - z.re));
    if (z.im.sign() < 0) v = -v;
    return {z.im / (BigFloat(2L, b) * v), v};
}

BigComplex exp(const BigComplex& z) {
    BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) fail(Errc::DivisionByZero, "log of zero");
    return {log(abs(z)), arg(z)};
}

BigComplex pow(const BigComplex& z, long n) {
    if (n < 0) return BigComplex(BigFloat(1L, z.bits())) / pow(z, -n);
    BigComplex r(BigFloat(1L, z.bits())), b = z;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

std::string to_string(const BigComplex& z, long digits) {
    std::string im = z.im.str(digits);
    if (!im.empty() && im[0] != '-') im = "+" + im;
    return z.re.str(digits) + im + "i";
}

}  // namespace ect
