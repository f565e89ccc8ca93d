#pragma once

#include <array>

#include "ect/arith/quad.hpp"
#include "ect/arith/ratfunc.hpp"
#include "ect/ec/curve.hpp"

namespace ect {

// Both roots of u^2 + 2((5i+j)/(i-j)) u + 1 = 0, the roots with
// u/(1-u)^2 = (j/i - 1)/12; the root with +sqrt comes first.
std::array<QuadElem, 2> unit_from_reduction(int i, int j);

// u/(1-u)^2
QuadElem reduction_x(const QuadElem& u);

struct UnitPair {
    std::array<int, 3> context;  // (i, j, k) with j < k
    std::array<QuadElem, 2> u, u_prime;
};
UnitPair unit_pair(int i, int j, int k);

struct IndependenceResult {
    bool independent = true;
    long M = 0, N = 0;
    int sign = 1;  // u^M = sign * u'^N
    bool u_totally_real = false, u_prime_totally_real = false;
    // Totally real and != +-1, so neither side can be a root of unity.
    bool roots_of_unity_excluded = false;
};

// Exhaustive search for u^M = +-u'^N, 1 <= M <= bound, 1 <= |N| <= bound,
// in the compositum tower.  Relations are reported with M > 0, smallest M
// first, then smallest |N|, positive N before negative.
IndependenceResult mult_independence(const QuadElem& u, const QuadElem& u_prime, long bound = 50);

// Whether a point of an integral local model at v reduces into the smooth
// locus of the reduced curve.
bool e0_membership(const CurvePoint<RatFunc>& P, const LongWeierstrass<RatFunc>& E, const Place& v);

}  // namespace ect
