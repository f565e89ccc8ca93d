#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>

#include "ect/analytic/bigfloat.hpp"

namespace ect {

// Lattice of y^2 = x(x-1)(x-lambda).  The lattice is that of the Weierstrass
// function with X = x - (1+lambda)/3 = wp(z) and y = wp'(z)/2, so the roots
// e_k of X^3 + AX + B are the values of wp at the half periods.
struct PeriodBasis {
    BigComplex lambda;
    std::array<BigComplex, 3> e;
    BigComplex omega1, omega2;  // Im(omega2/omega1) > 0, tau reduced
    long digits = 0;
    std::shared_ptr<const PeriodBasis> shadow;  // same lattice at lower precision

    mpfr_prec_t bits() const { return omega1.bits(); }
    BigComplex tau() const { return omega2 / omega1; }
};

struct ComplexPoint {
    bool infinity = false;
    BigComplex x, y;
};

struct ThetaCoords {
    std::array<BigFloat, 6> xi;  // each in [0,1)
    long digits = 0;
};

// Main evaluation runs with 15 guard digits, the shadow with 5.
constexpr long kGuardDigits = 15;
constexpr long kShadowGuardDigits = 5;

PeriodBasis periods_legendre(const BigComplex& lambda, long digits);
PeriodBasis periods_legendre(const Rational& lambda, long digits);

// (g2, g3) of a lattice from Eisenstein q-series, and of the curve from e_k.
std::pair<BigComplex, BigComplex> eisenstein_g2g3(const BigComplex& omega1, const BigComplex& omega2);
std::pair<BigComplex, BigComplex> curve_g2g3(const PeriodBasis& basis);
// max relative deviation of the two pairs
BigFloat reconstruction_error(const PeriodBasis& basis);

BigComplex wp(const BigComplex& z, const PeriodBasis& basis);
BigComplex wp_prime(const BigComplex& z, const PeriodBasis& basis);

BigComplex carlson_rf(const BigComplex& x, const BigComplex& y, const BigComplex& z);

// Real coordinates (s, t) with z = s*omega1 + t*omega2.
std::pair<BigFloat, BigFloat> lattice_coords(const BigComplex& z, const PeriodBasis& basis);
// Representative of z mod the lattice with coordinates in [-1/2, 1/2).
BigComplex reduce_mod_lattice(const BigComplex& z, const PeriodBasis& basis);
// Distance of z to the lattice, in lattice coordinates (sup norm).
BigFloat lattice_distance(const BigComplex& z, const PeriodBasis& basis);

// z with wp(z) = X and wp'(z) = 2y for a point of the Legendre curve.
BigComplex elliptic_log(const ComplexPoint& P, const PeriodBasis& basis);
ComplexPoint legendre_point(const Rational& x, const Rational& y, mpfr_prec_t bits);

ThetaCoords theta_coords(const std::array<ComplexPoint, 3>& triple, const PeriodBasis& basis);

// Legendre model of y^2 = x^3 + a x + b over C: x = e1 + s^2 x_L,
// y = s^3 y_L with s^2 = e2 - e1, lambda = (e3 - e1)/(e2 - e1).
struct LegendreEmbedding {
    BigComplex a, b, e1, s, lambda;
    ComplexPoint map(const BigComplex& x, const BigComplex& y) const;
};
LegendreEmbedding legendre_embedding(const BigComplex& a, const BigComplex& b);

// For points given by x only on y^2 = x^3 + a x + b: y is the stable square
// root of the right-hand side (any choice gives the same torsion order).
struct WeierstrassTheta {
    LegendreEmbedding model;
    PeriodBasis basis;
    ThetaCoords theta;
};
WeierstrassTheta weierstrass_theta(const BigComplex& a, const BigComplex& b, const std::array<BigComplex, 3>& xs,
                                   long digits);

}  // namespace ect
