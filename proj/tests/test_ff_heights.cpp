#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ect/ff/heights.hpp"

using namespace ect;
using S = LaurentSeries<Rational>;

namespace {

std::mt19937_64 rng(314);

RatFunc T() { return RatFunc::t(); }
RatFunc C(long n, long d = 1) { return RatFunc(make_rational(n, d)); }

CurveOverFF legendre() { return curve_ff_from_legendre(T()); }

FFPoint legendre_point(const RatFunc& xl) { return ff_point_from_x(legendre_to_short_x(xl, T()), legendre()); }

const BadPlaceRecord* find(const std::vector<BadPlaceRecord>& bad, const Place& v) {
    for (const auto& r : bad)
        if (r.place == v) return &r;
    return nullptr;
}

RatFunc rand_poly(int deg, int range = 4) {
    std::uniform_int_distribution<int> c(-range, range);
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(Rational(c(rng)));
    return RatFunc(QPoly(cs));
}

// x-coordinates on the Legendre family whose sections are not torsion
const std::vector<RatFunc>& sections() {
    static const std::vector<RatFunc> xs = {C(2), C(-1), C(3), T() + C(1), C(2) * T()};
    return xs;
}

}  // namespace

TEST_CASE("bad places of the Legendre family") {
    auto bad = legendre();
    auto rec = bad_places(bad);
    for (const Place& v : {Place::finite(QPoly::x()), Place::finite(QPoly({Rational(-1), Rational(1)})), Place::infinity()}) {
        const BadPlaceRecord* r = find(rec, v);
        REQUIRE(r != nullptr);
        CHECK(r->type == ReductionType::Multiplicative);
        CHECK(r->v_j == -2);
        CHECK(r->v_delta > 0);
    }
    CHECK(rec.size() == 3);
    // j = 2^8 (t^2-t+1)^3 / (t^2 (t-1)^2)
    RatFunc t = T();
    RatFunc jl = C(256) * (t * t - t + C(1)) * (t * t - t + C(1)) * (t * t - t + C(1)) / (t * t * (t - C(1)) * (t - C(1)));
    CHECK(legendre().j() == jl);
}

TEST_CASE("bad places: additive and constant curves") {
    auto E = make_curve_ff(C(0), T());
    auto rec = bad_places(E);
    const BadPlaceRecord* r = find(rec, Place::finite(QPoly::x()));
    REQUIRE(r != nullptr);
    CHECK(r->type == ReductionType::Additive);
    CHECK(r->v_j == kInfiniteValuation);
    CHECK(r->v_delta == 2);

    auto G = make_curve_ff(C(1), C(1));
    for (const auto& b : bad_places(G)) CHECK(b.place.is_infinite());
    CHECK(bad_places(G).empty());
    CHECK_THROWS_AS(make_curve_ff(C(-3), C(2)), Error);
}

TEST_CASE("product formula for the discriminant") {
    for (int trial = 0; trial < 25; ++trial) {
        RatFunc a = rand_poly(2) / (rand_poly(1) + C(7)), b = rand_poly(3);
        if (is_zero(C(4) * a * a * a + C(27) * b * b)) continue;
        auto E = make_curve_ff(a, b);
        long total = 0;
        for (const auto& v : relevant_places(E)) total += valuation(E.discriminant(), v) * v.degree();
        CHECK(total == 0);
    }
}

TEST_CASE("local Tate model at a good place") {
    auto E = make_curve_ff(C(1), C(1));
    auto M = local_tate_model(E, Place::finite(QPoly::x()), 8);
    REQUIRE(M.w);
    CHECK(M.w->valuation() == 0);
    CHECK(M.w->coeff(0) == 1);
    CHECK(M.a4.coeff(0) == Rational(1) + Rational(1, 48));
    CHECK(M.a4.coeff(1) == 0);
    CHECK(check_twist_equation(E, M));
}

TEST_CASE("local Tate model at (t) on the Legendre family") {
    auto E = legendre();
    const long K = 10;
    auto M = local_tate_model(E, Place::finite(QPoly::x()), K);
    REQUIRE(M.q);
    CHECK(M.q->valuation() == 2);
    CHECK(check_twist_equation(E, M));
    // x(x-1)(x-0) has a node at 0 with tangents y^2 = -x^2
    CHECK_FALSE(M.split);
    CHECK_FALSE(M.w.has_value());

    // q = 1/j + 744/j^2 + 750420/j^3 + O(1/j^4)
    S J = local_expansion(C(1) / E.j(), Place::finite(QPoly::x()), 12);
    S q3 = J + S::constant(Rational(744)) * J * J + S::constant(Rational(750420)) * J * J * J;
    CHECK(q3.agrees_with(*M.q, 8));
}

TEST_CASE("local Tate model at (t-1) is split") {
    auto E = legendre();
    Place v = Place::finite(QPoly({Rational(-1), Rational(1)}));
    auto M = local_tate_model(E, v, 10);
    CHECK(M.q->valuation() == 2);
    CHECK(M.split);
    REQUIRE(M.w);
    CHECK(check_twist_equation(E, M));
}

TEST_CASE("Infinity on the Legendre family is not semistable") {
    auto E = legendre();
    auto r = classify_place(E, Place::infinity());
    CHECK(r.type == ReductionType::Multiplicative);
    CHECK_FALSE(r.semistable);
    try {
        local_tate_model(E, Place::infinity(), 8);
        FAIL("expected RamifiedTwist");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RamifiedTwist);
    }
}

TEST_CASE("series helpers") {
    RatFunc t = T();
    S e = local_expansion(C(1) / (C(1) - t), Place::finite(QPoly::x()), 6);
    for (long k = 0; k < 6; ++k) CHECK(e.coeff(k) == 1);
    S inf = local_expansion(t * t + C(1), Place::infinity(), 3);
    CHECK(inf.valuation() == -2);
    CHECK(inf.coeff(0) == 1);
    S sq = S::exact(0, {Rational(4), Rational(4), Rational(1)});  // (2+s)^2
    S r = series_sqrt(sq);
    CHECK(r.coeff(0) == 2);
    CHECK(r.coeff(1) == 1);
    CHECK(r.coeff(2) == 0);
    CHECK_THROWS_AS(series_sqrt(S::exact(1, {Rational(1)})), Error);
    CHECK_THROWS_AS(series_sqrt(S::exact(0, {Rational(2)})), Error);
}

TEST_CASE("singular-reduction law on constructed curves") {
    int hits = 0;
    for (int trial = 0; trial < 30; ++trial) {
        long c = 1 + trial % 3;
        RatFunc t = T();
        // 3c^2 + a and c^3 + ac + b vanish at t = 0, so x = c reduces to the node
        RatFunc a = C(-3 * c * c) + t * rand_poly(1), b = C(2 * c * c * c) + t * rand_poly(1);
        if (is_zero(C(4) * a * a * a + C(27) * b * b)) continue;
        auto E = make_curve_ff(a, b);
        auto bad = bad_places(E);
        bool skip = false;
        for (const auto& r : bad)
            if (r.type == ReductionType::Multiplicative && !r.semistable) skip = true;
        if (skip) continue;
        SiSets s = si_sets(E, {C(1), C(2), C(3)});
        for (const auto& rec : s.records) {
            int n = rec.singular[0] + rec.singular[1] + rec.singular[2];
            CHECK(n <= 1);
            CHECK(rec.law_holds);
            if (!rec.place.is_infinite() && rec.place.poly() == QPoly::x()) {
                CHECK(rec.singular[c - 1]);
                ++hits;
                for (long j = 1; j <= 3; ++j) {
                    if (j == c) continue;
                    REQUIRE(rec.reduced_xt[j - 1]);
                    // oracle: x_T = -a/(18b) x - 1/12 with a = -3c^2, b = 2c^3
                    Rational expect = make_rational(j, 12 * c) - Rational(1, 12);
                    CHECK(*rec.reduced_xt[j - 1] == AlgNum(expect));
                }
            }
        }
        CHECK(std::find(s.S[c - 1].begin(), s.S[c - 1].end(), Place::finite(QPoly::x())) != s.S[c - 1].end());
    }
    CHECK(hits > 10);
}

TEST_CASE("good reduction everywhere gives empty S sets") {
    auto E = make_curve_ff(C(1), C(1));
    SiSets s = si_sets(E, {C(1), C(2), C(3)});
    for (int i = 0; i < 3; ++i) CHECK(s.S[i].empty());
}

TEST_CASE("points and group law") {
    auto E = legendre();
    for (const auto& xl : sections()) {
        FFPoint P = legendre_point(xl);
        CHECK(on_curve(P, E));
        CHECK(on_curve(ff_add(P, P, E), E));
        CHECK(on_curve(ff_mul(5, P, E), E));
        CHECK(ff_add(P, ff_neg(P), E).infinity);
        FFPoint a = ff_add(ff_mul(2, P, E), P, E), b = ff_mul(3, P, E);
        CHECK(a.x == b.x);
        CHECK(a.c == b.c);
    }
    SquareClass s = square_class(C(12) * T() * T() * T() / (T() + C(1)));
    CHECK(s.c * s.c * s.d == C(12) * T() * T() * T() / (T() + C(1)));
    CHECK(s.d == C(3) * T() * (T() + C(1)));
}

TEST_CASE("local heights") {
    auto E = legendre();
    auto bad = bad_places(E);
    for (const auto& xl : sections()) {
        FFPoint P = legendre_point(xl);
        for (int m = 1; m <= 4; ++m) {
            FFPoint Q = ff_mul(m, P, E);
            for (const auto& v : relevant_places(E)) {
                if (!on_identity_component(Q.x, Q.d, E, v)) {
                    CHECK_THROWS_AS(local_height(Q, E, v), Error);
                    continue;
                }
                Rational h = local_height(Q, E, v);
                CHECK(h >= 0);
                if (find(bad, v)) CHECK(h > 0);
            }
        }
    }
    auto G = make_curve_ff(C(1), C(1));
    FFPoint P = ff_point_from_x(C(0), G);
    CHECK(local_height(P, G, Place::finite(QPoly::x())) == 0);
    CHECK_THROWS_AS(local_height(FFPoint{true}, G, Place::infinity()), Error);
    auto A = make_curve_ff(C(0), T());
    CHECK_THROWS_AS(canonical_height(ff_point_from_x(C(1), A), A), Error);
}

TEST_CASE("torsion has height zero") {
    auto E = legendre();
    for (const RatFunc& xl : {C(0), C(1), T()}) {
        auto h = canonical_height(legendre_point(xl), E);
        CHECK(h.value == 0);
        CHECK(h.torsion);
    }
    CHECK(canonical_height(FFPoint{true}, E).value == 0);
}

TEST_CASE("canonical height is quadratic") {
    auto E = legendre();
    for (const auto& xl : sections()) {
        FFPoint P = legendre_point(xl);
        auto h1 = canonical_height(P, E);
        auto h2 = canonical_height(ff_mul(2, P, E), E);
        auto h3 = canonical_height(ff_mul(3, P, E), E);
        CHECK(h1.value > 0);
        CHECK(h2.value == 4 * h1.value);
        CHECK(h3.value == 9 * h1.value);
        // m-independence
        auto alt = canonical_height(P, E, 24, h1.multiplier + 1);
        CHECK(alt.multiplier != h1.multiplier);
        CHECK(alt.value == h1.value);
    }
}

TEST_CASE("parallelogram law") {
    auto E = legendre();
    FFPoint P = legendre_point(C(2));
    // same square class as P: x' with x'(x'-1)(x'-t) = 2(2-t) * square
    FFPoint Q = ff_add(P, legendre_point(C(0)), E);
    REQUIRE(Q.d == P.d);
    Rational lhs = canonical_height(ff_add(P, Q, E), E).value + canonical_height(ff_add(P, ff_neg(Q), E), E).value;
    Rational rhs = 2 * canonical_height(P, E).value + 2 * canonical_height(Q, E).value;
    CHECK(lhs == rhs);
    FFPoint R = ff_mul(3, P, E);
    lhs = canonical_height(ff_add(P, R, E), E).value + canonical_height(ff_add(P, ff_neg(R), E), E).value;
    rhs = 2 * canonical_height(P, E).value + 2 * canonical_height(R, E).value;
    CHECK(lhs == rhs);
}

TEST_CASE("Gram matrix and rank") {
    auto E = legendre();
    FFPoint P = legendre_point(C(2));
    Gram g = gram_matrix({P, P, P}, E);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(g[i][j] == g[j][i]);
    CHECK(positive_semidefinite(g));
    CHECK(matrix_rank(g) == 1);
    CHECK(rank_lower_bound({P, ff_neg(P), FFPoint{true}}, E) == 1);
    CHECK(rank_lower_bound({legendre_point(C(0)), legendre_point(C(1)), legendre_point(T())}, E) == 0);

    std::array<FFPoint, 3> pts = {legendre_point(C(2)), legendre_point(C(-1)), legendre_point(T() + C(1))};
    Gram h = gram_matrix(pts, E);
    CHECK(positive_semidefinite(h));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(h[i][j] == h[j][i]);
    FFPoint Q = ff_mul(2, P, E);
    CHECK(height_pairing(P, Q, E) == 2 * canonical_height(P, E).value);
}
