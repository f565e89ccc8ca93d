#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ect/arith/poly.hpp"
#include "ect/arith/rational.hpp"

namespace ect {

using QPoly = Poly<Rational>;

std::string to_string(const QPoly& p, const std::string& var = "x");

// Primitive integer polynomial with positive leading coefficient (as QPoly)
// and the rational content c with p = c * primitive_part(p).
QPoly primitive_part(const QPoly& p);
Rational content(const QPoly& p);

// Monic gcd over Q, computed modularly; preferred over the generic Euclid.
QPoly gcd(const QPoly& a, const QPoly& b);

struct QFactorization {
    Rational unit;                                      // leading coefficient
    std::vector<std::pair<QPoly, unsigned>> factors;    // monic irreducible, with multiplicity
};

// Complete factorization over Q.  Factors are ordered by degree, then by
// coefficient sequence, so the result is canonical.
QFactorization factor(const QPoly& p);

bool is_irreducible(const QPoly& p);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const QPoly& p);

// Total order used to sort polynomials canonically: degree, then
// coefficients from the leading one down.
bool poly_less(const QPoly& a, const QPoly& b);

// Real roots of a square-free polynomial: disjoint intervals (lo, hi], each
// containing exactly one root, of width at most `width`; ascending.
struct RootInterval {
    Rational lo, hi;
};
std::vector<RootInterval> isolate_real_roots(const QPoly& p, const Rational& width);
int count_real_roots(const QPoly& p);

// Sign of p at x (−1, 0, 1).
int sign_at(const QPoly& p, const Rational& x);

}  // namespace ect
