#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ect/ec/models.hpp"
#include "ect/ec/torsion.hpp"

using namespace ect;

namespace {

std::mt19937_64 rng(7177);

Rational rand_q(int range = 9) {
    std::uniform_int_distribution<int> n(-range, range), d(1, range);
    return make_rational(n(rng), d(rng));
}
Rational rand_nonzero_q(int range = 9) {
    Rational r;
    do r = rand_q(range);
    while (sgn(r) == 0);
    return r;
}
using Pt = CurvePoint<Rational>;
using QPt = CurvePoint<QuadElem>;
Pt pt(long x, long y) { return Pt::affine(Rational(x), Rational(y)); }

// Curve through two given points, solving for (a, b).
template <class F>
WeierstrassCurve<F> curve_through(const F& x1, const F& y1, const F& x2, const F& y2) {
    F r1 = F(y1 * y1) - F(x1 * x1 * x1), r2 = F(y2 * y2) - F(x2 * x2 * x2);
    F a = F(r1 - r2) / F(x1 - x2);
    F b = r1 - F(a * x1);
    return {a, b};
}

// Kubert family y^2 + (1-c)xy - by = x^3 - bx^2, (0,0) of order n.
LongWeierstrass<Rational> kubert(int n, const Rational& t) {
    Rational b, c;
    switch (n) {
        case 4: b = t, c = 0; break;
        case 5: b = t, c = t; break;
        case 6: b = t + t * t, c = t; break;
        case 7: b = t * t * t - t * t, c = t * t - t; break;
        default: fail(Errc::InvalidArgument, "unsupported order");
    }
    return {Rational(1 - c), Rational(-b), Rational(-b), Rational(0), Rational(0)};
}

}  // namespace

TEST_CASE("j-invariants") {
    CHECK(j_weierstrass(Rational(0), Rational(1)) == 0);
    CHECK(j_weierstrass(Rational(1), Rational(0)) == 1728);
    Rational num = Rational(256) * 27 * (-343), den = Rational(4) * (-343) + Rational(27) * 36;
    CHECK(j_weierstrass(Rational(-7), Rational(6)) == Rational(num / den));
    CHECK(j_weierstrass(Rational(-7), Rational(6)) == make_rational(256 * 27 * 343, 400));
    CHECK_THROWS_AS(j_weierstrass(Rational(-3), Rational(2)), Error);
    CHECK(j_legendre(Rational(2)) == 1728);
    CHECK(j_legendre(Rational(-1)) == 1728);
    CHECK(j_legendre(Rational(1, 2)) == 1728);
    CHECK_THROWS_AS(j_legendre(Rational(1)), Error);
    try {
        j_legendre(Rational(0));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegenerateLambda);
    }
    // the general c4^3/Delta agrees on every model
    for (int it = 0; it < 20; ++it) {
        Rational a = rand_q(), b = rand_q(), l = rand_nonzero_q();
        if (l == 1) continue;
        if (sgn(WeierstrassCurve<Rational>{a, b}.discriminant()))
            CHECK(WeierstrassCurve<Rational>{a, b}.general().j() == j_weierstrass(a, b));
        CHECK(make_legendre(l).general().j() == j_legendre(l));
    }
}

TEST_CASE("group law examples") {
    WeierstrassCurve<Rational> E{0, 1};
    CHECK(point_add(pt(2, 3), Pt::at_infinity(), E) == pt(2, 3));
    CHECK(point_add(pt(2, 3), pt(2, -3), E).infinity);
    CHECK(point_add(pt(2, 3), pt(2, 3), E) == pt(0, 1));
    CHECK(scalar_mul(6, pt(2, 3), E).infinity);
    CHECK(scalar_mul(0, pt(2, 3), E).infinity);
    CHECK(scalar_mul(-1, pt(2, 3), E) == pt(2, -3));
    CHECK(scalar_mul(2, pt(0, 0), WeierstrassCurve<Rational>{-1, 0}).infinity);
    // oracle: repeated addition
    Pt acc;
    for (int k = 1; k <= 6; ++k) {
        acc = point_add(acc, pt(2, 3), E);
        CHECK(acc == scalar_mul(k, pt(2, 3), E));
    }
    CHECK_THROWS_AS(point_add(pt(1, 1), pt(2, 3), E), Error);
}

TEST_CASE("group law associativity over Q and Q(sqrt 5)") {
    for (int it = 0; it < 25; ++it) {
        Rational x1 = rand_q(), y1 = rand_q(), x2 = rand_q(), y2 = rand_q();
        if (x1 == x2) continue;
        auto E = curve_through(x1, y1, x2, y2);
        if (is_zero(E.discriminant())) continue;
        Pt P = Pt::affine(x1, y1), Q = Pt::affine(x2, y2);
        Pt R = point_add(scalar_mul(2, P, E), point_neg(Q, E), E);
        CHECK(point_add(point_add(P, Q, E), R, E) == point_add(P, point_add(Q, R, E), E));
    }
    QuadElem s5 = QuadElem::sqrt_of(5);
    for (int it = 0; it < 15; ++it) {
        QuadElem x1 = QuadElem(rand_q()) + QuadElem(rand_q()) * s5, y1 = QuadElem(rand_q()) + QuadElem(rand_q()) * s5;
        QuadElem x2 = QuadElem(rand_q()) + QuadElem(rand_q()) * s5, y2 = QuadElem(rand_q());
        if (x1 == x2) continue;
        auto E = curve_through(x1, y1, x2, y2);
        if (is_zero(E.discriminant())) continue;
        QPt P = QPt::affine(x1, y1), Q = QPt::affine(x2, y2);
        QPt R = point_add(P, point_add(P, Q, E), E);
        CHECK(point_add(point_add(P, Q, E), R, E) == point_add(P, point_add(Q, R, E), E));
    }
}

TEST_CASE("scalar multiplication is a homomorphism") {
    WeierstrassCurve<Rational> E{0, -2};
    Pt P = pt(3, 5);
    std::vector<Pt> table(81);
    table[40] = Pt::at_infinity();
    for (int k = 1; k <= 40; ++k) {
        table[40 + k] = point_add(table[39 + k], P, E);
        table[40 - k] = point_neg(table[40 + k], E);
    }
    for (int m = -20; m <= 20; m += 3) CHECK(scalar_mul(m, P, E) == table[40 + m]);
    for (int m = -20; m <= 20; ++m)
        for (int n = -20; n <= 20; n += 7) CHECK(table[40 + m + n] == point_add(table[40 + m], table[40 + n], E));
}

TEST_CASE("division polynomial shapes") {
    for (int it = 0; it < 10; ++it) {
        Rational a = rand_q(), b = rand_q();
        QPoly x = QPoly::x(), A(a), B(b);
        CHECK(division_poly(2, a, b) == x * x * x + A * x + B);
        CHECK(division_poly(3, a, b) ==
              QPoly(Rational(3)) * pow(x, 4) + QPoly(Rational(6)) * A * x * x + QPoly(Rational(12)) * B * x - A * A);
        CHECK(division_poly(1, a, b) == QPoly(Rational(1)));
        // degree (N^2 - 1)/2 for odd N, (N^2 + 2)/2 for even N
        for (int n = 2; n <= 9; ++n) CHECK(division_poly(n, a, b).degree() == (n % 2 ? (n * n - 1) / 2 : (n * n + 2) / 2));
    }
    CHECK(division_poly(3, Rational(0), Rational(1)).eval(Rational(0)) == 0);
    CHECK(scalar_mul(3, pt(0, 1), WeierstrassCurve<Rational>{0, 1}).infinity);
}

TEST_CASE("division polynomial roots are torsion x-coordinates") {
    int exercised = 0;
    auto check_curve = [&](const WeierstrassCurve<Rational>& E, int n) {
        WeierstrassCurve<QuadElem> EK{QuadElem(E.a), QuadElem(E.b)};
        for (const Rational& x0 : rational_roots(division_poly(n, E.a, E.b))) {
            QuadElem y0 = quad_sqrt(QuadElem(E.rhs(x0)));
            CHECK(scalar_mul(n, QPt::affine(QuadElem(x0), y0), EK).infinity);
            ++exercised;
        }
    };
    for (int it = 0; it < 12; ++it) {
        // psi_3 is linear in b: place a 3-torsion root at x0
        Rational x0 = rand_nonzero_q(), a = rand_q();
        Rational b = (a * a - 3 * x0 * x0 * x0 * x0 - 6 * a * x0 * x0) / (12 * x0);
        WeierstrassCurve<Rational> E{a, b};
        if (is_zero(E.discriminant())) continue;
        check_curve(E, 3);
        check_curve(E, 6);
        for (int n = 4; n <= 7; ++n) {
            auto K = kubert(n, rand_nonzero_q(5));
            if (is_zero(K.discriminant())) continue;
            check_curve(short_model(K).target, n);
        }
        Rational ra = rand_q(4), rb = rand_q(4);
        if (!is_zero(WeierstrassCurve<Rational>{ra, rb}.discriminant()))
            for (int n = 2; n <= 7; ++n) check_curve({ra, rb}, n);
    }
    CHECK(exercised > 40);
}

TEST_CASE("torsion_order_x examples") {
    auto c = torsion_order_x(Rational(2), WeierstrassCurve<Rational>{0, 1}, 10);
    REQUIRE(c);
    CHECK(c->order == 6);
    REQUIRE(c->witness.size() == 2);
    CHECK(c->witness[0].first == 2);
    CHECK(c->witness[1].first == 3);
    CHECK(verify_certificate(*c, Rational(2), WeierstrassCurve<Rational>{0, 1}));
    // oracle: the point itself, y = 3
    CHECK(scalar_mul(6, pt(2, 3), WeierstrassCurve<Rational>{0, 1}).infinity);
    CHECK(!scalar_mul(2, pt(2, 3), WeierstrassCurve<Rational>{0, 1}).infinity);
    CHECK(!scalar_mul(3, pt(2, 3), WeierstrassCurve<Rational>{0, 1}).infinity);

    auto c2 = torsion_order_x(Rational(0), WeierstrassCurve<Rational>{-1, 0});
    REQUIRE(c2);
    CHECK(c2->order == 2);

    QuadElem a = QuadElem(Rational(3)) + QuadElem(Rational(2)) * QuadElem::sqrt_of(3);
    WeierstrassCurve<QuadElem> E3{a, QuadElem()};
    auto c3 = torsion_order_x(QuadElem(Rational(1)), E3, 5);
    REQUIRE(c3);
    CHECK(c3->order == 3);
    // oracle: a solves a^2 - 6a - 3 = 0
    CHECK(is_zero(QuadElem(a * a - QuadElem(Rational(6)) * a - QuadElem(Rational(3)))));

    CHECK(!torsion_order_x(Rational(3), WeierstrassCurve<Rational>{0, -2}, 12));
    auto bad = *c;
    bad.witness[0].second = 0;
    CHECK(!verify_certificate(bad, Rational(2), WeierstrassCurve<Rational>{0, 1}));
    bad = *c;
    bad.order = 12;
    CHECK(!verify_certificate(bad, Rational(2), WeierstrassCurve<Rational>{0, 1}));
}

TEST_CASE("torsion orders on Kubert curves, both signs of y") {
    for (int n = 4; n <= 7; ++n)
        for (int it = 0; it < 3; ++it) {
            auto K = kubert(n, rand_nonzero_q(6));
            if (is_zero(K.discriminant())) continue;
            auto S = short_model(K);
            Pt P = S(Pt::affine(Rational(0), Rational(0)));
            CHECK(on_curve(P, S.target));
            auto c = torsion_order_x(P.x, S.target);
            REQUIRE(c);
            CHECK(c->order == n);
            CHECK(verify_certificate(*c, P.x, S.target));
            CHECK(scalar_mul(n, P, S.target).infinity);
            CHECK(scalar_mul(n, point_neg(P, S.target), S.target).infinity);
        }
}

TEST_CASE("multiple_x agrees with the group law") {
    WeierstrassCurve<Rational> E{0, -2};
    for (int m = 1; m <= 7; ++m) CHECK(multiple_x(m, Rational(3), E) == scalar_mul(m, pt(3, 5), E).x);
    CHECK_THROWS_AS(multiple_x(6, Rational(2), WeierstrassCurve<Rational>{0, 1}), Error);
}

TEST_CASE("Tate-normal conversion") {
    WeierstrassCurve<Rational> E{1, 1};
    auto T = to_tate_normal(E, Rational(1));
    CHECK(T.target.a == Rational(49, 48));
    CHECK(T.target.b == Rational(1) + Rational(49, 576) - Rational(1, 864));
    CHECK(T.target.b - E.b == E.a / 12 + Rational(1, 1728));
    Pt P = pt(0, 1);
    CHECK(on_curve(T(P), T.target));
    CHECK_THROWS_AS(to_tate_normal(E, Rational(0)), Error);
    for (int it = 0; it < 20; ++it) {
        Rational a = rand_q(), b = rand_q(), w = rand_nonzero_q();
        WeierstrassCurve<Rational> E2{a, b};
        if (is_zero(E2.discriminant())) continue;
        auto M = to_tate_normal(E2, w);
        CHECK(M.target.general().j() == j_weierstrass(a, b));
        CHECK(M.target.b - w * w * w * w * w * w * b == M.target.a / 12 - Rational(1, 864));
        CHECK(M.map_x(Rational(1)) == w * w - Rational(1, 12));
        // a point on E2 through (x, y): choose x, then force y via b
        Rational x1 = rand_q(), y1 = rand_q(), x2 = rand_q(), y2 = rand_q();
        if (x1 == x2) continue;
        auto E3 = curve_through(x1, y1, x2, y2);
        if (is_zero(E3.discriminant())) continue;
        auto M3 = to_tate_normal(E3, w);
        Pt P1 = Pt::affine(x1, y1), P2 = Pt::affine(x2, y2);
        CHECK(on_curve(M3(P1), M3.target));
        CHECK(M3(point_add(P1, P2, E3)) == point_add(M3(P1), M3(P2), M3.target));
        CHECK(M3.inverse(M3(P1)) == P1);
    }
    QuadElem w = QuadElem(Rational(1)) + QuadElem::sqrt_of(2);
    auto MQ = to_tate_normal(WeierstrassCurve<QuadElem>{QuadElem(Rational(2)), QuadElem(Rational(-3))}, w);
    CHECK(MQ.target.general().j() == j_weierstrass(QuadElem(Rational(2)), QuadElem(Rational(-3))));
}

TEST_CASE("Legendre conversion") {
    WeierstrassCurve<Rational> E{-1, 0};
    // sorted roots are (-1, 0, 1); order (0, 1, -1)
    auto L = weierstrass_to_legendre(E, {1, 2, 0});
    CHECK(L.target.lambda == QuadElem(Rational(-1)));
    QPt P = QPt::affine(QuadElem(Rational(2)), quad_sqrt(QuadElem(Rational(6))));
    CHECK(L(P) == P);
    CHECK(L(QPt::affine(QuadElem(), QuadElem())) == QPt::affine(QuadElem(), QuadElem()));
    CHECK(scalar_mul(2, L(QPt::affine(QuadElem(), QuadElem())), L.target).infinity);
    // order (0, -1, 1) needs r = sqrt(-1)
    auto L2 = weierstrass_to_legendre(E, {1, 0, 2});
    CHECK(j_legendre(L2.target.lambda) == QuadElem(Rational(1728)));
    CHECK_THROWS_AS(weierstrass_to_legendre(WeierstrassCurve<Rational>{0, 2}), Error);
    try {
        weierstrass_to_legendre(WeierstrassCurve<Rational>{1, 1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RootsNotInTower);
    }

    int checked = 0;
    std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    while (checked < 50) {
        Rational e1 = rand_q(4), e2 = rand_q(4);
        Rational e3 = -e1 - e2;
        if (e1 == e2 || e1 == e3 || e2 == e3) continue;
        Rational a = e1 * e2 + e1 * e3 + e2 * e3, b = -e1 * e2 * e3;
        WeierstrassCurve<Rational> Es{a, b};
        auto M = weierstrass_to_legendre(Es, perms[checked % 6]);
        CHECK(j_legendre(M.target.lambda) == QuadElem(j_weierstrass(a, b)));
        Rational x = rand_q();
        QuadElem y;
        try {
            y = quad_sqrt(QuadElem(Es.rhs(x)), M.r.support());
        } catch (const Error&) {
            continue;
        }
        QPt P = QPt::affine(QuadElem(x), y);
        CHECK(on_curve(M(P), M.target));
        CHECK(M.inverse(M(P)) == P);
        ++checked;
    }
}
