#include "ect/arith/algnum.hpp"

namespace ect {

NumberFieldPtr make_number_field(const QPoly& g, std::string var) {
    if (g.degree() < 1) fail(Errc::InvalidArgument, "number field modulus must be non-constant");
    return std::make_shared<NumberFieldCtx>(NumberFieldCtx{monic(g), std::move(var)});
}

AlgNum::AlgNum(NumberFieldPtr ctx, QPoly v) : ctx_(std::move(ctx)), v_(std::move(v)) {
    if (ctx_) v_ = v_ % ctx_->modulus;
}

AlgNum AlgNum::generator(const NumberFieldPtr& ctx) { return AlgNum(ctx, QPoly::x()); }

Rational AlgNum::rational_value() const {
    if (!is_rational()) fail(Errc::InvalidArgument, "algebraic number is not rational");
    return v_.coeff(0);
}

void AlgNum::adopt(const AlgNum& o) {
    if (!o.ctx_) return;
    if (!ctx_) {
        ctx_ = o.ctx_;
        return;
    }
    if (ctx_ != o.ctx_ && ctx_->modulus != o.ctx_->modulus)
        fail(Errc::InvalidArgument, "mixing elements of different number fields");
}

AlgNum AlgNum::operator-() const {
    AlgNum r(*this);
    r.v_ = -r.v_;
    return r;
}
AlgNum& AlgNum::operator+=(const AlgNum& o) {
    adopt(o);
    v_ += o.v_;
    return *this;
}
AlgNum& AlgNum::operator-=(const AlgNum& o) {
    adopt(o);
    v_ -= o.v_;
    return *this;
}
AlgNum& AlgNum::operator*=(const AlgNum& o) {
    adopt(o);
    v_ = v_ * o.v_;
    if (ctx_ && v_.degree() >= ctx_->modulus.degree()) v_ = v_ % ctx_->modulus;
    return *this;
}
AlgNum AlgNum::inverse() const {
    if (v_.zero()) fail(Errc::DivisionByZero, "inverse of zero algebraic number");
    if (is_rational()) return AlgNum(ctx_, QPoly(Rational(1 / v_.coeff(0))));
    auto eg = ext_gcd(v_, ctx_->modulus);
    if (eg.g.degree() != 0) fail(Errc::DivisionByZero, "non-invertible residue (modulus not irreducible)");
    return AlgNum(ctx_, eg.s);
}
AlgNum& AlgNum::operator/=(const AlgNum& o) {
    adopt(o);
    AlgNum inv = o.inverse();
    return *this *= inv;
}

std::string AlgNum::str() const {
    if (!ctx_ || is_rational()) return to_string(v_.coeff(0));
    return to_string(v_, ctx_->var);
}

}  // namespace ect
