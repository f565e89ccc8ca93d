#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ect {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& p, const Integer& q);

// "p/q", or just "p" when q = 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
// Accepts "p", "p/q" and optional sign; canonicalizes.
Rational parse_rational(std::string_view s);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

// H(p/q) = max(|p|, q).
Integer naive_height(const Rational& x);

// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// n = kernel * root^2 with kernel square-free (sign carried by kernel).
struct IntegerSquareSplit {
    Integer kernel;
    Integer root;
};
IntegerSquareSplit square_split(const Integer& n);

// x = kernel * root^2, kernel a square-free integer, root a positive rational.
struct RationalSquareSplit {
    Integer kernel;
    Rational root;
};
RationalSquareSplit square_split(const Rational& x);

std::optional<Rational> rational_sqrt(const Rational& x);

Rational pow(const Rational& x, long e);
Integer pow(const Integer& x, unsigned long e);

}  // namespace ect
