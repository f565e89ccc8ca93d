#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ect/search/search.hpp"

using namespace ect;

namespace {

std::mt19937_64 rng(4242);

Rational rand_q(int range = 9) {
    std::uniform_int_distribution<int> n(-range, range), d(1, range);
    return make_rational(n(rng), d(rng));
}
QPoly zpoly(std::vector<long> hi_to_lo) {
    std::vector<Rational> c;
    for (auto it = hi_to_lo.rbegin(); it != hi_to_lo.rend(); ++it) c.emplace_back(*it);
    return QPoly(c);
}
QuadElem qe(long a, long b, long d) { return QuadElem(Rational(a)) + QuadElem(Rational(b)) * QuadElem::sqrt_of(d); }

template <class F>
bool record_verifies(const SurfaceSpec& spec, const InstanceRecord<F>& r) {
    WeierstrassCurve<F> E{r.a, r.b};
    if (is_zero(E.discriminant())) return false;
    for (int i = 0; i < 3; ++i) {
        if (r.certificates[i].order != r.orders[i]) return false;
        if (!verify_certificate(r.certificates[i], F(spec.xcoords[i]), E)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("roots in quadratic towers") {
    auto r2 = tower_roots(zpoly({1, 0, -2}));
    REQUIRE(r2);
    CHECK(r2->size() == 2);
    CHECK((*r2)[0] == QuadElem::sqrt_of(2));
    for (auto g : {zpoly({1, 0, -10, 0, 1}), zpoly({1, 0, 0, 0, 1}), zpoly({1, 0, -40, 0, 352, 0, -960, 0, 576})}) {
        auto r = tower_roots(g);
        if (g.degree() == 8) {
            CHECK(!r);  // depth 3
            continue;
        }
        REQUIRE(r);
        CHECK(r->size() == 4);
        for (auto& x : *r) CHECK(is_zero(g.eval(x)));
        for (size_t i = 0; i < r->size(); ++i)
            for (size_t j = i + 1; j < r->size(); ++j) CHECK(!((*r)[i] == (*r)[j]));
    }
    CHECK(!tower_roots(zpoly({1, 1, 1, 1, 1})));  // cyclic quartic
    CHECK(!tower_roots(zpoly({1, 0, 0, 0, -2})));  // dihedral quartic
    CHECK(!tower_roots(zpoly({1, 0, -1, -1})));
    auto r1 = tower_roots(zpoly({3, 5}));
    REQUIRE(r1);
    CHECK((*r1)[0] == QuadElem(Rational(-5, 3)));
}

TEST_CASE("bivariate division polynomials and resultants") {
    for (int n = 2; n <= 5; ++n) {
        Rational c = rand_q();
        BivPoly P = division_poly_ab(n, c);
        for (int it = 0; it < 4; ++it) {
            Rational a0 = rand_q(), b0 = rand_q();
            QPoly atb = P.eval<QPoly>(QPoly(b0));
            CHECK(atb.eval(a0) == division_poly(n, a0, b0).eval(c));
        }
    }
    // against the Euclidean resultant after specializing a
    for (int it = 0; it < 8; ++it) {
        BivPoly p = division_poly_ab(2 + it % 4, rand_q()), q = division_poly_ab(2 + (it + 1) % 4, rand_q());
        QPoly r = resultant_in_b(p, q);
        for (int k = 0; k < 3; ++k) {
            Rational a0 = rand_q(20);
            QPoly pa = p.map([&](const QPoly& c) { return QPoly(c.eval(a0)); }).eval<QPoly>(QPoly::x());
            QPoly qa = q.map([&](const QPoly& c) { return QPoly(c.eval(a0)); }).eval<QPoly>(QPoly::x());
            if (pa.degree() != p.degree() || qa.degree() != q.degree()) continue;
            CHECK(r.eval(a0) == resultant(pa, qa));
        }
    }
}

TEST_CASE("second difference identity") {
    auto id = second_difference_identity();
    CHECK(id.lambda == std::array<Integer, 3>{1, -2, 1});
    CHECK(id.a_coeff == 0);
    CHECK(id.b_coeff == 0);
    CHECK(id.constant == 12);
    CHECK(id.determinant == -12);
    // oracle: evaluate at (a, b) = (0, 0) and at random points
    for (int it = 0; it < 5; ++it) {
        Rational a = rand_q(), b = rand_q();
        Rational v = (1 + a + b) - 2 * (8 + 2 * a + b) + (27 + 3 * a + b);
        CHECK(v == 12);
    }
}

TEST_CASE("123-surface: 2-torsion at two points is inconsistent") {
    auto spec = make_surface_spec({1, 2, 3});
    auto r = solve_order_system(spec, {2, 2, 2});
    CHECK(r.tower.empty());
    CHECK(r.algebraic.empty());
    REQUIRE(r.witness);
    CHECK(r.witness->a == -7);
    CHECK(r.witness->b == 6);
    CHECK(r.witness->residual == 12);
    CHECK(27 + 3 * r.witness->a + r.witness->b == 12);
    for (int n3 = 3; n3 <= 5; ++n3) {
        auto rn = solve_order_system(spec, {2, 2, n3});
        CHECK(rn.tower.empty());
        CHECK(rn.algebraic.empty());
        REQUIRE(rn.witness);
        CHECK(rn.witness->residual != 0);
    }
    CHECK_THROWS_AS(make_surface_spec({1, 1, 3}), Error);
    CHECK_THROWS_AS(solve_order_system(spec, {1, 2, 2}), Error);
    SearchConfig tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(solve_order_system(spec, {5, 5, 5}, tiny), Error);
}

TEST_CASE("CM line with b = 0") {
    auto spec = make_surface_spec({0, 1, -1}, Rational(0));
    auto r = solve_order_system(spec, {2, 2, 2});
    bool found = false;
    for (auto& rec : r.tower) {
        CHECK(record_verifies(spec, rec));
        if (rec.a == QuadElem(Rational(-1))) found = true;
    }
    CHECK(found);

    // closure under divisors, and the x = 1 / x = -1 symmetry
    std::map<std::array<int, 3>, SolveResult> all;
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b)
            for (int c = 2; c <= 4; ++c) all[{a, b, c}] = solve_order_system(spec, {a, b, c});
    for (auto& [ord, res] : all)
        for (auto& rec : res.tower) {
            CHECK(record_verifies(spec, rec));
            CHECK(rec.orders[1] == rec.orders[2]);
            for (auto& [big, res2] : all) {
                if (big[0] % ord[0] || big[1] % ord[1] || big[2] % ord[2]) continue;
                if (rec.orders != ord) continue;
                bool present = false;
                for (auto& r2 : res2.tower) present = present || (r2.a == rec.a && r2.b == rec.b);
                CHECK(present);
            }
        }
}

TEST_CASE("123-surface at small orders: the single instance (-11, 14)") {
    auto spec = make_surface_spec({1, 2, 3});
    SearchConfig cfg;
    cfg.threads = 2;
    auto all = solve_all_orders(spec, 4, cfg);
    CHECK(all.size() == 27);
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].orders < all[i].orders);
    for (auto& r : all) {
        for (auto& rec : r.tower) {
            CHECK(record_verifies(spec, rec));
            CHECK(rec.a == QuadElem(Rational(-11)));
            CHECK(rec.b == QuadElem(Rational(14)));
            CHECK(rec.orders == std::array<int, 3>{4, 2, 4});
        }
        bool divisible = r.orders[0] % 4 == 0 && r.orders[1] % 2 == 0 && r.orders[2] % 4 == 0;
        CHECK(r.tower.size() == (divisible ? 1u : 0u));
        CHECK(r.algebraic.empty());
        CHECK(r.resultant_degree <= cfg.budget);
    }
    // oracle: explicit points and the group law, y(3) = 2 sqrt 2
    WeierstrassCurve<QuadElem> E{QuadElem(Rational(-11)), QuadElem(Rational(14))};
    using P = CurvePoint<QuadElem>;
    P p1 = P::affine(QuadElem(Rational(1)), QuadElem(Rational(2)));
    P p2 = P::affine(QuadElem(Rational(2)), QuadElem());
    P p3 = P::affine(QuadElem(Rational(3)), qe(0, 2, 2));
    CHECK(scalar_mul(2, p1, E) == p2);
    CHECK(scalar_mul(2, p3, E) == p2);
    CHECK(scalar_mul(2, p2, E).infinity);
    // deterministic regardless of thread count
    auto serial = solve_all_orders(spec, 3, {});
    auto par = solve_all_orders(spec, 3, cfg);
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].resultant_degree == par[i].resultant_degree);
        CHECK(serial[i].numeric_only.size() == par[i].numeric_only.size());
    }
}

TEST_CASE("CM surface scan") {
    auto scan = cm_surface_scan(8);
    long cumulative = 0;
    for (int n = 2; n <= 8; ++n) {
        auto& v = scan[n];
        CHECK(!v.empty());
        long before = cumulative;
        for (auto& inst : v) {
            cumulative += inst.conjugates();
            if (inst.in_tower) {
                auto& cp = std::get<TorsionCertificate<QuadElem>>(inst.cert_plus);
                auto& cm = std::get<TorsionCertificate<QuadElem>>(inst.cert_minus);
                CHECK(cp.order == n);
                CHECK(cm.order == n);
                WeierstrassCurve<QuadElem> E{inst.a_tower, QuadElem()};
                CHECK(verify_certificate(cp, QuadElem(Rational(1)), E));
                CHECK(verify_certificate(cm, QuadElem(Rational(-1)), E));
                CHECK(is_zero(inst.minpoly.eval(inst.a_tower)));
            } else {
                auto& cp = std::get<TorsionCertificate<AlgNum>>(inst.cert_plus);
                auto& cm = std::get<TorsionCertificate<AlgNum>>(inst.cert_minus);
                CHECK(cp.order == n);
                CHECK(cm.order == n);
                WeierstrassCurve<AlgNum> E{inst.a_alg, AlgNum()};
                CHECK(verify_certificate(cp, AlgNum(Rational(1)), E));
                CHECK(verify_certificate(cm, AlgNum(Rational(-1)), E));
            }
        }
        CHECK(cumulative > before);
    }
    REQUIRE(scan[2].size() == 1);
    CHECK(scan[2][0].a_tower == QuadElem(Rational(-1)));
    REQUIRE(scan[3].size() == 2);
    CHECK(scan[3][0].a_tower == qe(3, 2, 3));
    CHECK(scan[3][1].a_tower == qe(3, -2, 3));
    // oracle for N = 3: a^2 - 6a - 3 = 0
    for (auto& inst : scan[3]) CHECK(is_zero(inst.a_tower * inst.a_tower - QuadElem(Rational(6)) * inst.a_tower - QuadElem(Rational(3))));
    // N = 4 tower roots: -3 +- 2 sqrt 2 from a^2 + 6a + 1
    bool has = false;
    for (auto& inst : scan[4]) has = has || inst.a_tower == qe(-3, 2, 2);
    CHECK(has);
}
