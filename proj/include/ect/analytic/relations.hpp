#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ect/analytic/periods.hpp"

namespace ect {

// p/N closest to xi; p is round(xi*N) and may equal N for xi just below 1.
struct RationalHit {
    Integer p, N;
    Rational value() const { return make_rational(p, N); }
    Integer residue() const;  // p mod N
};

// nullopt means NotRational.  Raises AmbiguousTolerance if tol >= 1/(2N).
std::optional<RationalHit> rationality_detect(const BigFloat& xi, const Integer& N, const BigFloat& tol);
std::optional<RationalHit> rationality_detect(double xi, long N, double tol);

// H(p/q) = max(|p|, q); a tuple's height is the largest coordinate height.
Integer rational_height(const Rational& r);
long counting_function(const std::vector<std::vector<Rational>>& points, const Integer& T);

// Relation (alpha, beta, gamma) with [alpha]P1 + [beta]P2 + [gamma]P3 = 0
// for torsion coordinates: row 0 modulo N, row 1 modulo R.
struct RelationVector {
    std::array<Integer, 3> chi;
    std::array<Integer, 5> extended;  // (chi, mu, nu) in the integer kernel
    Integer norm;                     // sup norm of chi
    bool proven_minimal = false;
};

using TorsionCoords = std::array<std::array<Integer, 3>, 2>;

RelationVector siegel_relation(const Integer& N, const Integer& R, const TorsionCoords& coords);
bool annihilates(const Integer& N, const Integer& R, const TorsionCoords& coords, const std::array<Integer, 5>& v);
// Smallest sup norm of a nonzero relation, by full enumeration of the box.
Integer exhaustive_min_norm(const Integer& N, const Integer& R, const TorsionCoords& coords);

// Canonical representative of +-chi: first nonzero entry positive.
std::array<Integer, 3> normalize_sign(std::array<Integer, 3> chi);

// Exact LLL reduction (delta = 3/4) of linearly independent integer rows.
std::vector<std::vector<Integer>> lll_reduce(std::vector<std::vector<Integer>> rows);

struct LogTriple {
    std::array<BigComplex, 3> logs;
    PeriodBasis basis;
};

// Smallest-norm chi with |chi| <= bound and alpha z1 + beta z2 + gamma z3 in
// the lattice to 10^(10 - digits).  A candidate is reported only when it also
// holds for `verification`, the same logs evaluated at higher precision.
std::optional<RelationVector> integer_relation_detect(const LogTriple& primary, const LogTriple& verification,
                                                      long bound);

}  // namespace ect
