#include "ect/ff/heights.hpp"

#include <algorithm>
#include <set>

#include "ect/ec/divpoly.hpp"
#include "ect/errors.hpp"
#include "ect/tate/tate.hpp"

namespace ect {

using Series = LaurentSeries<Rational>;

namespace {

RatFunc pi_pow(const Place& v, long n) {
    RatFunc u = v.uniformizer(), r(Rational(1));
    for (long i = 0; i < std::labs(n); ++i) r *= u;
    return n >= 0 ? r : RatFunc(Rational(1)) / r;
}

long val(const RatFunc& f, const Place& v) { return is_zero(f) ? kInfiniteValuation : valuation(f, v); }

long ceil_div(long a, long b) {  // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

Rational rational_residue(const AlgNum& x) {
    if (!x.is_rational()) fail(Errc::Unsupported, "residue is not rational");
    return x.rational_value();
}

struct MinimalData {
    long sx;  // x'' = pi^sx x
    RatFunc a, b;
};

MinimalData minimal_data(const CurveOverFF& E, const Place& v, int e) {
    long kw = minimal_scale(E, v, e);
    long sx = 2 * kw / e;
    return {sx, pi_pow(v, 2 * sx) * E.a, pi_pow(v, 3 * sx) * E.b};
}

bool singular_reduction(const RatFunc& x, const MinimalData& M, const Place& v) {
    if (val(x, v) < 0) return false;
    RatFunc fx = RatFunc(Rational(3)) * x * x + M.a;
    RatFunc f = x * x * x + M.a * x + M.b;
    return val(fx, v) > 0 && val(f, v) > 0;
}

WeierstrassCurve<RatFunc> as_weierstrass(const CurveOverFF& E) { return {E.a, E.b}; }

}  // namespace

RatFunc CurveOverFF::discriminant() const {
    return RatFunc(Rational(-16)) * (RatFunc(Rational(4)) * a * a * a + RatFunc(Rational(27)) * b * b);
}

RatFunc CurveOverFF::j() const {
    RatFunc d = RatFunc(Rational(4)) * a * a * a + RatFunc(Rational(27)) * b * b;
    return RatFunc(Rational(6912)) * a * a * a / d;
}

CurveOverFF make_curve_ff(const RatFunc& a, const RatFunc& b) {
    CurveOverFF E{a, b};
    if (is_zero(E.discriminant())) fail(Errc::SingularCurve, "discriminant vanishes");
    return E;
}

RatFunc legendre_to_short_x(const RatFunc& x, const RatFunc& lambda) {
    return x - (RatFunc(Rational(1)) + lambda) / RatFunc(Rational(3));
}

CurveOverFF curve_ff_from_legendre(const RatFunc& lambda) {
    if (is_zero(lambda) || lambda == RatFunc(Rational(1))) fail(Errc::DegenerateLambda, "lambda is 0 or 1");
    // x(x-1)(x-l) = x^3 + A x^2 + B x with A = -(1+l), B = l
    RatFunc A = -(RatFunc(Rational(1)) + lambda), B = lambda;
    RatFunc three(Rational(3)), two(Rational(2)), n27(Rational(27)), nine(Rational(9));
    RatFunc a = B - A * A / three;
    RatFunc b = two * A * A * A / n27 - A * B / three;
    return make_curve_ff(a, b);
}

const char* to_string(ReductionType t) {
    switch (t) {
        case ReductionType::Good: return "Good";
        case ReductionType::Multiplicative: return "Multiplicative";
        case ReductionType::Additive: return "Additive";
    }
    return "?";
}

long minimal_scale(const CurveOverFF& E, const Place& v, int e) {
    long k = LONG_MIN;
    if (!is_zero(E.a)) k = std::max(k, ceil_div(-e * valuation(E.a, v), 4));
    if (!is_zero(E.b)) k = std::max(k, ceil_div(-e * valuation(E.b, v), 6));
    if (k < -3 * e || k > 3 * e) fail(Errc::Unsupported, "minimal model lies outside the scaling window at " + v.str());
    return k;
}

BadPlaceRecord classify_place(const CurveOverFF& E, const Place& v) {
    BadPlaceRecord r{v};
    r.scale = minimal_scale(E, v, 1);
    r.v_delta = valuation(E.discriminant(), v) + 12 * r.scale;
    RatFunc j = E.j();
    r.v_j = is_zero(j) ? kInfiniteValuation : valuation(j, v);
    if (r.v_delta == 0) return r;
    if (r.v_j < 0) {
        r.type = ReductionType::Multiplicative;
        r.semistable = !is_zero(E.a) && valuation(E.a, v) + 4 * r.scale == 0;
        if (r.semistable && v.degree() == 1) {
            RatFunc gamma = -E.a / (RatFunc(Rational(18)) * E.b);
            r.split = rational_sqrt(rational_residue(leading_coefficient(gamma, v))).has_value();
        }
    } else {
        r.type = ReductionType::Additive;
        r.semistable = false;
    }
    return r;
}

std::vector<Place> relevant_places(const CurveOverFF& E) {
    std::set<Place> s;
    for (const RatFunc* f : {&E.a, &E.b}) {
        if (is_zero(*f)) continue;
        for (const auto& p : support(*f)) s.insert(p);
    }
    for (const auto& p : support(E.discriminant())) s.insert(p);
    s.insert(Place::infinity());
    return {s.begin(), s.end()};
}

std::vector<BadPlaceRecord> bad_places(const CurveOverFF& E) {
    std::vector<BadPlaceRecord> out;
    for (const auto& v : relevant_places(E)) {
        BadPlaceRecord r = classify_place(E, v);
        if (r.type != ReductionType::Good) out.push_back(r);
    }
    return out;
}

LaurentSeries<Rational> local_expansion(const RatFunc& f, const Place& v, long K) {
    if (v.degree() != 1) fail(Errc::Unsupported, "local expansions need a degree-one place");
    auto expand = [&](const QPoly& p) -> Series {
        if (v.is_infinite()) {
            std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
            return Series::exact(-p.degree(), c);
        }
        Rational c0 = -v.poly().coeff(0);
        QPoly shifted = p.eval<QPoly>(QPoly({c0, Rational(1)}));
        return Series::exact(0, shifted.coeffs());
    };
    if (is_zero(f)) return Series::zero(K);
    Series N = expand(f.num()), D = expand(f.den());
    long vf = N.valuation() - D.valuation();
    long rel = std::max<long>(K - vf, 1);
    return (N * D.inverse(rel)).truncate(K);
}

LaurentSeries<Rational> series_sqrt(const LaurentSeries<Rational>& x) {
    if (x.is_zero()) fail(Errc::NotASquare, "square root of a series that is zero to its truncation");
    long v = x.valuation();
    if (v % 2) fail(Errc::NotASquare, "odd valuation");
    auto r0 = rational_sqrt(x.leading());
    if (!r0) fail(Errc::NotASquare, "leading coefficient is not a square");
    long rel = x.is_exact() ? static_cast<long>(x.coeffs().size()) * 2 + 8 : x.relative_precision();
    std::vector<Rational> c = x.coeffs(), r(static_cast<size_t>(rel));
    c.resize(static_cast<size_t>(rel));
    r[0] = *r0;
    for (long n = 1; n < rel; ++n) {
        Rational acc = c[static_cast<size_t>(n)];
        for (long i = 1; i < n; ++i) acc -= r[static_cast<size_t>(i)] * r[static_cast<size_t>(n - i)];
        r[static_cast<size_t>(n)] = acc / (2 * r[0]);
    }
    return Series::truncated(v / 2, r, rel);
}

LocalTateModel local_tate_model(const CurveOverFF& E, const Place& v, long K) {
    if (K < 2) fail(Errc::InvalidArgument, "truncation must be at least 2");
    BadPlaceRecord rec = classify_place(E, v);
    if (rec.type == ReductionType::Additive) fail(Errc::AdditiveReduction, "additive reduction at " + v.str());
    if (!rec.semistable) fail(Errc::RamifiedTwist, "the twist needs a ramified extension at " + v.str());
    if (v.degree() != 1) fail(Errc::Unsupported, "Tate models at places of degree > 1");
    LocalTateModel M{v};
    M.type = rec.type;
    M.K = K;
    long va = is_zero(E.a) ? 0 : valuation(E.a, v);
    long vb = is_zero(E.b) ? 0 : valuation(E.b, v);
    Series a_s = local_expansion(E.a, v, K + va), b_s = local_expansion(E.b, v, K + vb);
    Series one = Series::constant(Rational(1));
    Series c48 = Series::constant(Rational(1, 48)), c12 = Series::constant(Rational(1, 12));
    Series c864 = Series::constant(Rational(1, 864));

    if (rec.type == ReductionType::Good) {
        Series w = Series::monomial(Rational(1), rec.scale);
        M.w2 = w * w;
        M.w = w;
        Series w4 = M.w2 * M.w2;
        M.a4 = (w4 * a_s + c48).truncate(K);
        M.a6 = (w4 * M.w2 * b_s + M.a4 * c12 - c864).truncate(K);
        return M;
    }

    // 1/j as a series with valuation n, then invert j(q) formally.
    long n = -rec.v_j;
    RatFunc d = RatFunc(Rational(4)) * E.a * E.a * E.a + RatFunc(Rational(27)) * E.b * E.b;
    Series J = local_expansion(d / (RatFunc(Rational(6912)) * E.a * E.a * E.a), v, K + n);
    long terms = K / n + 3;
    Series a4q = a4_series<Rational>(terms + 1), a6q = a6_series<Rational>(terms + 1);
    Series c4 = one - Series::constant(Rational(48)) * a4q;
    Series c6 = Series::constant(Rational(-1)) + Series::constant(Rational(72)) * a4q - Series::constant(Rational(864)) * a6q;
    Series delta = (c4 * c4 * c4 - c6 * c6) * Series::constant(Rational(1, 1728));
    // h(q) = q j(q) = q c4^3 / Delta(q), a unit power series
    Series h = (c4 * c4 * c4 * Series::monomial(Rational(1), 1) / delta).truncate(terms);
    std::vector<Rational> hc;
    for (long k = 0; k < terms; ++k) hc.push_back(h.coeff(k));
    Series q = J;
    for (long it = 0; it <= K / n + 1; ++it) q = (J * compose(hc, q)).truncate(K);
    M.q = q;
    TateCurve<Rational> T = TateCurve<Rational>::make(q, K);
    M.a4 = T.a4;
    M.a6 = T.a6;
    Series w4 = (M.a4 - c48) / a_s;
    Series w6 = (M.a6 - M.a4 * c12 + c864) / b_s;
    M.w2 = w6 / w4;
    if (M.w2.valuation() % 2) fail(Errc::RamifiedTwist, "w^2 has odd valuation");
    M.split = rec.split.value_or(false);
    if (M.split) M.w = series_sqrt(M.w2);
    return M;
}

bool check_twist_equation(const CurveOverFF& E, const LocalTateModel& M) {
    long va = is_zero(E.a) ? 0 : valuation(E.a, M.place);
    Series a_s = local_expansion(E.a, M.place, M.K + va + 4);
    Series lhs = M.w2 * M.w2 * a_s;
    Series rhs = M.a4 - Series::constant(Rational(1, 48));
    long upto = std::min({lhs.precision(), rhs.precision(), M.K});
    if (upto < 1) return false;
    bool ok = lhs.agrees_with(rhs, upto);
    if (M.w) {
        Series w2 = *M.w * *M.w;
        ok = ok && w2.agrees_with(M.w2, std::min({w2.precision(), M.w2.precision(), M.K}));
    }
    return ok;
}

SquareClass square_class(const RatFunc& f) {
    if (is_zero(f)) return {RatFunc(), RatFunc(Rational(1))};
    QFactorization fn = factor(f.num()), fd = factor(f.den());
    RationalSquareSplit ss = square_split(fn.unit);
    RatFunc c(ss.root), d(Rational(ss.kernel));
    for (const auto& [p, e] : fn.factors) {
        for (unsigned i = 0; i < e / 2; ++i) c *= RatFunc(p);
        if (e % 2) d *= RatFunc(p);
    }
    for (const auto& [p, e] : fd.factors) {
        for (unsigned i = 0; i < (e + 1) / 2; ++i) c /= RatFunc(p);
        if (e % 2) d *= RatFunc(p);
    }
    return {c, d};
}

FFPoint ff_point_from_x(const RatFunc& x, const CurveOverFF& E) {
    SquareClass s = square_class(E.rhs(x));
    return {false, x, s.c, s.d};
}

bool on_curve(const FFPoint& P, const CurveOverFF& E) {
    return P.infinity || P.c * P.c * P.d == E.rhs(P.x);
}

FFPoint ff_neg(const FFPoint& P) { return {P.infinity, P.x, -P.c, P.d}; }

FFPoint ff_add(const FFPoint& P, const FFPoint& Q, const CurveOverFF& E) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    RatFunc d = is_zero(P.c) ? Q.d : P.d;
    if (!is_zero(P.c) && !is_zero(Q.c) && P.d != Q.d)
        fail(Errc::InvalidArgument, "points lie over different quadratic extensions");
    RatFunc m;
    if (P.x == Q.x) {
        if (P.c == -Q.c) return FFPoint{true, {}, {}, RatFunc(Rational(1))};
        m = (RatFunc(Rational(3)) * P.x * P.x + E.a) / (RatFunc(Rational(2)) * P.c * d);
    } else {
        m = (Q.c - P.c) / (Q.x - P.x);
    }
    RatFunc x3 = m * m * d - P.x - Q.x;
    RatFunc c3 = -(P.c + m * (x3 - P.x));
    return {false, x3, c3, d};
}

FFPoint ff_mul(long m, const FFPoint& P, const CurveOverFF& E) {
    FFPoint base = m < 0 ? ff_neg(P) : P, acc{true, {}, {}, RatFunc(Rational(1))};
    for (long k = std::labs(m); k; k >>= 1) {
        if (k & 1) acc = ff_add(acc, base, E);
        if (k > 1) base = ff_add(base, base, E);
    }
    return acc;
}

bool on_identity_component(const RatFunc& x, const RatFunc& d, const CurveOverFF& E, const Place& v) {
    int e = (valuation(d, v) % 2) ? 2 : 1;
    MinimalData M = minimal_data(E, v, e);
    return !singular_reduction(pi_pow(v, M.sx) * x, M, v);
}

namespace {

Rational local_height_x(const RatFunc& x, const RatFunc& d, const CurveOverFF& E, const Place& v) {
    int e = (valuation(d, v) % 2) ? 2 : 1;
    MinimalData M = minimal_data(E, v, e);
    RatFunc xm = pi_pow(v, M.sx) * x;
    if (singular_reduction(xm, M, v))
        fail(Errc::NotOnIdentityComponent, "point reduces to the singular point at " + v.str());
    long vx = val(xm, v);
    Rational lam = vx < 0 ? Rational(-vx, 2) : Rational(0);
    lam += make_rational(valuation(E.discriminant(), v) + 6 * M.sx, 12);
    return lam;
}

void refuse_additive(const std::vector<BadPlaceRecord>& bad) {
    for (const auto& r : bad)
        if (r.type == ReductionType::Additive)
            fail(Errc::AdditiveReduction, "additive reduction at " + r.place.str());
}

}  // namespace

Rational local_height(const FFPoint& P, const CurveOverFF& E, const Place& v) {
    if (P.infinity) fail(Errc::IdentityPoint, "local height of the identity");
    if (classify_place(E, v).type == ReductionType::Additive)
        fail(Errc::AdditiveReduction, "additive reduction at " + v.str());
    return local_height_x(P.x, P.d, E, v);
}

HeightResult canonical_height(const FFPoint& P, const CurveOverFF& E, int max_multiplier, int min_multiplier) {
    HeightResult out;
    if (P.infinity) {
        out.torsion = true;
        return out;
    }
    std::vector<BadPlaceRecord> bad = bad_places(E);
    refuse_additive(bad);
    WeierstrassCurve<RatFunc> W = as_weierstrass(E);
    for (int m = std::max(1, min_multiplier); m <= max_multiplier; ++m) {
        RatFunc xm;
        try {
            xm = multiple_x(m, P.x, W);
        } catch (const Error& e) {
            if (e.code() != Errc::KernelElement) throw;
            out.value = 0;
            out.multiplier = m;
            out.torsion = true;
            return out;
        }
        bool ok = true;
        for (const auto& r : bad)
            if (!on_identity_component(xm, P.d, E, r.place)) ok = false;
        if (!ok) continue;
        std::set<Place> places;
        for (const auto& v : relevant_places(E)) places.insert(v);
        if (!is_zero(xm))
            for (const auto& v : support(xm)) places.insert(v);
        for (const auto& v : support(P.d)) places.insert(v);
        Rational total = 0;
        for (const auto& v : places) {
            Rational lam = local_height_x(xm, P.d, E, v);
            if (lam != 0) out.local.push_back({v, lam});
            total += lam * v.degree();
        }
        out.multiplier = m;
        out.value = total / (m * m);
        out.torsion = out.value == 0;
        return out;
    }
    fail(Errc::MultiplierNotFound, "no multiplier up to " + std::to_string(max_multiplier));
}

Rational height_pairing(const FFPoint& P, const FFPoint& Q, const CurveOverFF& E) {
    if (P.infinity || Q.infinity || is_zero(P.c) || is_zero(Q.c)) return 0;
    if (P.d != Q.d) return 0;
    Rational hs = canonical_height(ff_add(P, Q, E), E).value;
    return (hs - canonical_height(P, E).value - canonical_height(Q, E).value) / 2;
}

Gram gram_matrix(const std::array<FFPoint, 3>& pts, const CurveOverFF& E) {
    Gram g;
    std::array<Rational, 3> h;
    for (int i = 0; i < 3; ++i) h[i] = canonical_height(pts[i], E).value;
    for (int i = 0; i < 3; ++i) {
        g[i][i] = h[i];
        for (int j = i + 1; j < 3; ++j) {
            const FFPoint &P = pts[i], &Q = pts[j];
            Rational p = 0;
            if (!(P.infinity || Q.infinity || is_zero(P.c) || is_zero(Q.c)) && P.d == Q.d)
                p = (canonical_height(ff_add(P, Q, E), E).value - h[i] - h[j]) / 2;
            g[i][j] = g[j][i] = p;
        }
    }
    return g;
}

int matrix_rank(const Gram& g) {
    Gram m = g;
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (m[r][col] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (int c = 0; c < 3; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

bool positive_semidefinite(const Gram& g) {
    // every principal minor is nonnegative
    for (int i = 0; i < 3; ++i)
        if (g[i][i] < 0) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g[i][i] * g[j][j] - g[i][j] * g[j][i] < 0) return false;
    Rational det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                   g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    return det >= 0;
}

int rank_lower_bound(const std::array<FFPoint, 3>& pts, const CurveOverFF& E) { return matrix_rank(gram_matrix(pts, E)); }

SiSets si_sets(const CurveOverFF& E, const std::array<RatFunc, 3>& xs) {
    SiSets out;
    for (const auto& rec : bad_places(E)) {
        if (rec.type != ReductionType::Multiplicative) continue;
        if (!rec.semistable) fail(Errc::RamifiedTwist, "the twist needs a ramified extension at " + rec.place.str());
        const Place& v = rec.place;
        MinimalData M = minimal_data(E, v, 1);
        SiPlaceRecord r{v};
        RatFunc w2 = -M.a / (RatFunc(Rational(18)) * M.b);
        std::array<RatFunc, 3> xm;
        for (int i = 0; i < 3; ++i) {
            xm[i] = pi_pow(v, M.sx) * xs[i];
            r.singular[i] = singular_reduction(xm[i], M, v);
            if (val(xm[i], v) >= 0) r.reduced_xt[i] = reduce_at(w2 * xm[i] - RatFunc(Rational(1, 12)), v);
        }
        for (int i = 0; i < 3; ++i) {
            if (!r.singular[i]) continue;
            out.S[i].push_back(v);
            if (!r.reduced_xt[i] || !is_zero(*r.reduced_xt[i])) r.law_holds = false;
            for (int j = 0; j < 3; ++j) {
                if (j == i) continue;
                AlgNum expect = reduce_at((xs[j] / xs[i] - RatFunc(Rational(1))) / RatFunc(Rational(12)), v);
                if (!r.reduced_xt[j] || *r.reduced_xt[j] != expect) r.law_holds = false;
            }
        }
        out.records.push_back(r);
    }
    return out;
}

}  // namespace ect
