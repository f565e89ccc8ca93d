#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ect/arith/laurent.hpp"
#include "ect/arith/ratfunc.hpp"

namespace ect {

// y^2 = x^3 + a x + b over Q(t).
struct CurveOverFF {
    RatFunc a, b;
    RatFunc discriminant() const;  // -16 (4a^3 + 27b^2)
    RatFunc j() const;
    RatFunc rhs(const RatFunc& x) const { return x * x * x + a * x + b; }
};
CurveOverFF make_curve_ff(const RatFunc& a, const RatFunc& b);
// Short model of y^2 = x(x-1)(x-lambda) via x_W = x_L - (1+lambda)/3.
CurveOverFF curve_ff_from_legendre(const RatFunc& lambda);
RatFunc legendre_to_short_x(const RatFunc& x_legendre, const RatFunc& lambda);

enum class ReductionType { Good, Multiplicative, Additive };
const char* to_string(ReductionType t);

// Multiplicative means v(j) < 0.  When the minimal model at v is itself
// additive (a quadratic twist of a multiplicative curve, type I_n*),
// semistable is false and the Tate model needs a ramified extension.
struct BadPlaceRecord {
    Place place;
    ReductionType type = ReductionType::Good;
    long v_delta = 0;                 // minimal model
    long v_j = kInfiniteValuation;    // j = 0 gives +infinity
    long scale = 0;                   // x -> pi^(2 scale) x gives the minimal model
    bool semistable = true;
    std::optional<bool> split;        // multiplicative, degree-one residue field
};

// Smallest k with pi^(4k) a and pi^(6k) b integral at v; k is in units of a
// uniformizer of the extension of ramification e.
long minimal_scale(const CurveOverFF& E, const Place& v, int e = 1);
BadPlaceRecord classify_place(const CurveOverFF& E, const Place& v);
std::vector<BadPlaceRecord> bad_places(const CurveOverFF& E);
// Finite places of a, b, the discriminant, then Infinity.
std::vector<Place> relevant_places(const CurveOverFF& E);

// Expansion of f at a degree-one place in s = t - c (or s = 1/t at
// Infinity), known modulo s^K.
LaurentSeries<Rational> local_expansion(const RatFunc& f, const Place& v, long K);
LaurentSeries<Rational> series_sqrt(const LaurentSeries<Rational>& x);  // NotASquare

// Model y^2 + xy = x^3 + a4(q) x + a6(q) at v with x_T = w^2 x - 1/12 and
// w^4 a = a4(q) - 1/48, w^6 b = a6(q) - a4(q)/12 + 1/864.
struct LocalTateModel {
    Place place;
    ReductionType type = ReductionType::Good;
    long K = 0;
    std::optional<LaurentSeries<Rational>> q;  // multiplicative places
    LaurentSeries<Rational> w2, a4, a6;
    std::optional<LaurentSeries<Rational>> w;  // absent when non-split
    bool split = true;
};
LocalTateModel local_tate_model(const CurveOverFF& E, const Place& v, long K = 12);
// Both sides of w^4 a = a4 - 1/48 agree to the model's truncation.
bool check_twist_equation(const CurveOverFF& E, const LocalTateModel& M);

// Point (x, c sqrt(d)) with c, d in Q(t) and d a canonical square-free
// representative (square-free integer times monic square-free polynomials).
struct FFPoint {
    bool infinity = false;
    RatFunc x, c, d = RatFunc(Rational(1));
};
struct SquareClass {
    RatFunc c, d;  // f = c^2 d
};
SquareClass square_class(const RatFunc& f);
FFPoint ff_point_from_x(const RatFunc& x, const CurveOverFF& E);
bool on_curve(const FFPoint& P, const CurveOverFF& E);
FFPoint ff_neg(const FFPoint& P);
// Sum of points whose y lie in the same Q(t)(sqrt d); InvalidArgument otherwise.
FFPoint ff_add(const FFPoint& P, const FFPoint& Q, const CurveOverFF& E);
FFPoint ff_mul(long m, const FFPoint& P, const CurveOverFF& E);

// Whether a point with the given x reduces into the smooth locus of the
// minimal model over the completion of Q(t)(sqrt d) at v.
bool on_identity_component(const RatFunc& x, const RatFunc& d, const CurveOverFF& E, const Place& v);

// 1/2 max(0, -v(x)) + v(Delta)/12 on the minimal model over the completion
// of Q(t)(sqrt d) at v, in the valuation of Q(t).
Rational local_height(const FFPoint& P, const CurveOverFF& E, const Place& v);

struct HeightResult {
    Rational value;
    int multiplier = 1;
    bool torsion = false;
    std::vector<std::pair<Place, Rational>> local;  // lambda_v([m]P), unweighted
};
HeightResult canonical_height(const FFPoint& P, const CurveOverFF& E, int max_multiplier = 12,
                              int min_multiplier = 1);

using Gram = std::array<std::array<Rational, 3>, 3>;
// <P,Q> = (h(P+Q) - h(P) - h(Q))/2; zero when sqrt d_P / sqrt d_Q is not in
// Q(t) (the automorphism fixing one and negating the other flips the sign).
Rational height_pairing(const FFPoint& P, const FFPoint& Q, const CurveOverFF& E);
Gram gram_matrix(const std::array<FFPoint, 3>& pts, const CurveOverFF& E);
int matrix_rank(const Gram& g);
bool positive_semidefinite(const Gram& g);
int rank_lower_bound(const std::array<FFPoint, 3>& pts, const CurveOverFF& E);

// Lemma-style coordinate law at multiplicative places for points with the
// given x-coordinates.
struct SiPlaceRecord {
    Place place;
    std::array<bool, 3> singular{};
    // Reduction of x_T = w^2 x - 1/12 for every point that is not singular
    std::array<std::optional<AlgNum>, 3> reduced_xt;
    bool law_holds = true;  // x_T(P_j) = (x_j/x_i - 1)/12 whenever P_i is singular
};
struct SiSets {
    std::array<std::vector<Place>, 3> S;
    std::vector<SiPlaceRecord> records;
};
SiSets si_sets(const CurveOverFF& E, const std::array<RatFunc, 3>& xs);

}  // namespace ect
