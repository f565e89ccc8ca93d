#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ect/tate/tate.hpp"
#include "ect/tate/units.hpp"

using namespace ect;
using S = LaurentSeries<Rational>;

namespace {

std::mt19937_64 rng(99);

Rational rand_q(int range = 9) {
    std::uniform_int_distribution<int> n(-range, range), d(1, range);
    return make_rational(n(rng), d(rng));
}

// sum_{n>=1} c(n) q^n/(1-q^n) expanded term by term, mod q^K.
S lambert(long K, const std::function<Integer(long)>& c) {
    S acc = S::zero(K);
    S one = S::constant(Rational(1));
    for (long n = 1; n < K; ++n) {
        S qn = S::monomial(Rational(1), n).truncate(K);
        acc = acc + Rational(c(n)) * qn * (one - qn).inverse();
    }
    return acc;
}

S random_unit(long K, Rational u0) {
    std::vector<Rational> c{u0};
    for (long k = 1; k < K; ++k) c.push_back(rand_q());
    return S::truncated(0, c, K);
}

QuadElem qe(long a, long b, long d) { return QuadElem(Rational(a)) + QuadElem(Rational(b)) * QuadElem::sqrt_of(d); }

}  // namespace

TEST_CASE("q-expansion coefficients against direct Lambert expansion") {
    const long K = 51;
    auto a4 = a4_coefficients(K), a6 = a6_coefficients(K);
    S s3 = lambert(K, [](long n) { return Integer(n * n * n); });
    S s5 = lambert(K, [](long n) { return pow(Integer(n), 5); });
    for (long m = 1; m < K; ++m) {
        CHECK(Rational(a4[m]) == -5 * s3.coeff(m));
        Rational c6 = -(5 * s3.coeff(m) + 7 * s5.coeff(m)) / 12;
        CHECK(c6.get_den() == 1);
        CHECK(Rational(a6[m]) == c6);
    }
    CHECK(s3.coeff(1) == 1);
    CHECK(s3.coeff(2) == 9);
    CHECK(s3.coeff(3) == 28);
    CHECK(s3.coeff(4) == 73);
    CHECK(a6[1] == -1);
    CHECK(a6[2] == -23);
    CHECK(a6[3] == -154);
    CHECK(a4[0] == 0);
    CHECK(a6[0] == 0);
    auto ser = a4_series<Rational>(4);
    CHECK(ser.precision() == 4);
    CHECK(ser.valuation() == 1);
}

TEST_CASE("the -5 s3 normalization is the one compatible with phi") {
    const long K = 10;
    auto E = TateCurve<Rational>::standard(K);
    auto P = tate_phi(S::constant(Rational(2)), E);
    CHECK(E.equation(P.x, P.y).vanishes_to(K - 2));
    TateCurve<Rational> alt = E;
    alt.a4 = Rational(1, 5) * E.a4;
    CHECK(!alt.equation(P.x, P.y).vanishes_to(K - 2));
}

TEST_CASE("phi leading terms and the kernel") {
    const long K = 16;
    auto E = TateCurve<Rational>::standard(K);
    auto P = tate_phi(S::constant(Rational(2)), E);
    CHECK(P.x.coeff(0) == 2);
    CHECK(P.y.coeff(0) == Rational(4) / Rational(-1));  // u^2/(1-u)^3
    S u = random_unit(K, Rational(3));
    auto A = tate_phi(u, E), B = tate_phi(u * E.q, E);
    CHECK(A.x.agrees_with(B.x, K - 1));
    CHECK(A.y.agrees_with(B.y, K - 1));
    CHECK_THROWS_AS(tate_phi(S::constant(Rational(1)), E), Error);
    CHECK_THROWS_AS(tate_phi(E.q, E), Error);
}

TEST_CASE("phi lands on the Tate curve") {
    const long K = 16;
    auto E = TateCurve<Rational>::standard(K);
    for (int it = 0; it < 30; ++it) {
        Rational u0;
        do u0 = rand_q();
        while (sgn(u0) == 0 || u0 == 1);
        auto P = tate_phi(random_unit(K, u0), E);
        S r = E.equation(P.x, P.y);
        CHECK(r.precision() >= K - 2);
        CHECK(r.vanishes_to(K - 2));
    }
    // q = s^2 with an odd-valuation representative
    auto E2 = TateCurve<Rational>::make(S::truncated(2, {Rational(1), Rational(3)}, K), K);
    S u = S::truncated(1, {Rational(2), Rational(-1), Rational(5)}, K);
    auto P2 = tate_phi(u, E2);
    CHECK(E2.equation(P2.x, P2.y).vanishes_to(K - 2));
    auto E3 = TateCurve<QuadElem>::standard(12);
    auto P3 = tate_phi(LaurentSeries<QuadElem>::constant(qe(7, 4, 3)), E3);
    CHECK(E3.equation(P3.x, P3.y).vanishes_to(10));
}

TEST_CASE("phi is a homomorphism to the truncation") {
    const long K = 12;
    auto E = TateCurve<Rational>::standard(K);
    for (int it = 0; it < 10; ++it) {
        Rational a0 = rand_q(), b0 = rand_q();
        if (sgn(a0) == 0 || sgn(b0) == 0 || a0 == 1 || b0 == 1 || a0 * b0 == 1 || a0 == b0) continue;
        S u = random_unit(K, a0), v = random_unit(K, b0);
        auto P = tate_phi(u, E), Q = tate_phi(v, E), R = tate_phi(u * v, E);
        // chord through P and Q on y^2 + xy = x^3 + a4 x + a6
        S l = (Q.y - P.y) * (Q.x - P.x).inverse();
        S x3 = l * l + l - P.x - Q.x;
        S y3 = S::constant(Rational(-1)) * (l + S::constant(Rational(1))) * x3 - (P.y - l * P.x);
        CHECK(x3.agrees_with(R.x, K - 3));
        CHECK(y3.agrees_with(R.y, K - 3));
    }
}

TEST_CASE("reduction of phi(u)") {
    const long K = 16;
    auto E = TateCurve<Rational>::standard(K);
    auto r2 = reduce_point(S::constant(Rational(2)), E);
    CHECK(r2.kind == ReductionKind::NonSingular);
    CHECK(r2.x == 2);
    auto r1 = reduce_point(S::truncated(0, {Rational(1), Rational(3)}, K), E);
    CHECK(r1.kind == ReductionKind::IdentityReduction);
    CHECK(reduce_point(S::constant(Rational(1)), E).kind == ReductionKind::IdentityReduction);
    auto rm = reduce_point(S::constant(Rational(-1)), E);
    CHECK(rm.x == Rational(-1, 4));
    CHECK_THROWS_AS(reduce_point(S::monomial(Rational(2), 1), E), Error);
    for (int it = 0; it < 30; ++it) {
        Rational u0;
        do u0 = rand_q();
        while (sgn(u0) == 0);
        auto r = reduce_point(random_unit(K, u0), E);
        if (u0 == 1) {
            CHECK(r.kind == ReductionKind::IdentityReduction);
        } else {
            CHECK(r.kind == ReductionKind::NonSingular);
            CHECK(r.x == u0 / ((1 - u0) * (1 - u0)));
            CHECK(r.y == u0 * u0 / ((1 - u0) * (1 - u0) * (1 - u0)));
        }
    }
}

TEST_CASE("unit table") {
    auto u12 = unit_from_reduction(1, 2);
    CHECK(u12[0] == qe(7, 4, 3));
    CHECK(u12[1] == qe(7, -4, 3));
    auto u13 = unit_from_reduction(1, 3);
    CHECK(u13[0] == qe(4, 1, 15));
    CHECK(u13[1] == qe(4, -1, 15));
    auto u21 = unit_from_reduction(2, 1);
    CHECK(u21[0] == qe(-11, 2, 30));
    CHECK(u21[1] == qe(-11, -2, 30));
    auto u23 = unit_from_reduction(2, 3);
    CHECK(u23[0] == qe(13, 2, 42));
    CHECK(u23[1] == qe(13, -2, 42));
    CHECK(reduction_x(qe(7, 4, 3)) == QuadElem(Rational(1, 12)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            auto r = unit_from_reduction(i, j);
            QuadElem target(make_rational(j - i, 12 * i));
            for (auto& u : r) {
                CHECK(reduction_x(u) == target);
                CHECK(norm(u) == 1);
            }
            Integer d = r[0].support().back();
            CHECK(conjugate(r[0], d) == r[1]);
            CHECK(r[0] * r[1] == QuadElem(Rational(1)));
        }
    auto p = unit_pair(2, 3, 1);
    CHECK(p.context == std::array<int, 3>{2, 1, 3});
    CHECK(p.u[0] == qe(-11, 2, 30));
    CHECK(p.u_prime[0] == qe(13, 2, 42));
}

TEST_CASE("multiplicative independence") {
    QuadElem u = qe(7, 4, 3), up = qe(4, 1, 15);
    auto r = mult_independence(u, up, 50);
    CHECK(r.independent);
    CHECK(r.roots_of_unity_excluded);
    // oracle: |M log u - N log u'| stays away from zero
    long double lu = std::log(7.0L + 4.0L * std::sqrt(3.0L)), lv = std::log(4.0L + std::sqrt(15.0L));
    long double mn = 1e9L;
    for (int M = 1; M <= 50; ++M)
        for (int N = 1; N <= 50; ++N) mn = std::min(mn, std::fabs(M * lu - N * lv));
    CHECK(mn > 1e-3L);

    auto rel = mult_independence(u, qe(97, 56, 3), 3);
    CHECK(!rel.independent);
    CHECK(rel.M == 2);
    CHECK(rel.N == 1);
    CHECK(rel.sign == 1);
    auto triv = mult_independence(QuadElem(Rational(-1)), QuadElem(Rational(1)), 5);
    CHECK(!triv.independent);
    CHECK(triv.M == 1);
    CHECK(triv.N == 1);
    CHECK(!triv.roots_of_unity_excluded);
    auto inv = mult_independence(u, qe(7, -4, 3), 5);
    CHECK(inv.M == 1);
    CHECK(inv.N == -1);

    std::vector<QuadElem> units{qe(7, 4, 3), qe(4, 1, 15), qe(-11, 2, 30), qe(13, 2, 42), qe(2, 1, 3), qe(97, 56, 3)};
    for (auto& a : units)
        for (auto& b : units) {
            try {
                CHECK(mult_independence(a, b, 6).independent == mult_independence(b, a, 6).independent);
            } catch (const Error& e) {
                CHECK(e.code() == Errc::TowerDepthExceeded);
            }
        }
    CHECK_THROWS_AS(mult_independence(qe(1, 1, 2), qe(1, 1, 3) * qe(1, 1, 5), 2), Error);
}

TEST_CASE("identity component membership") {
    RatFunc t = RatFunc::t();
    Place P0 = Place::finite(QPoly::x());
    RatFunc one(Rational(1)), zero;
    // y^2 + xy = x^3 + (2t^2 - t^3): (t, t) reduces to the node at t = 0
    LongWeierstrass<RatFunc> E{one, zero, zero, zero, RatFunc(Rational(2)) * t * t - t * t * t};
    auto P = CurvePoint<RatFunc>::affine(t, t);
    CHECK(!e0_membership(P, E, P0));
    CHECK(e0_membership(P, E, Place::finite(QPoly::x() - QPoly(Rational(1)))));
    // good reduction model: y^2 = x^3 + 1 has no singular point anywhere finite
    LongWeierstrass<RatFunc> G{zero, zero, zero, zero, one};
    CHECK(e0_membership(CurvePoint<RatFunc>::affine(RatFunc(Rational(2)), RatFunc(Rational(3))), G, P0));
    // a pole in x goes to the smooth point at infinity: (1/t^2, 1/t^3) on y^2 = x^3 + t^2 x - 1
    RatFunc xi = one / (t * t), yi = one / (t * t * t);
    LongWeierstrass<RatFunc> I{zero, zero, zero, t * t, RatFunc(Rational(-1))};
    CHECK(e0_membership(CurvePoint<RatFunc>::affine(xi, yi), I, P0));
    // the same point against a model with a pole in a6
    LongWeierstrass<RatFunc> Hb{zero, zero, zero, zero, yi * yi - xi * xi * xi + one / t};
    CHECK_THROWS_AS(e0_membership(CurvePoint<RatFunc>::affine(xi, yi + zero), Hb, P0), Error);
}
