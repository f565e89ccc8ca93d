#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ect/search/search.hpp"

namespace ect {

SurfaceSpec make_surface_spec(const std::array<Rational, 3>& xs, std::optional<Rational> fixed_b) {
    if (xs[0] == xs[1] || xs[0] == xs[2] || xs[1] == xs[2])
        fail(Errc::InvalidArgument, "x-coordinates must be pairwise distinct");
    return {xs, std::move(fixed_b)};
}

BivPoly division_poly_ab(int n, const Rational& c) {
    if (n < 1) fail(Errc::InvalidArgument, "division polynomial index must be positive");
    BivPoly x{QPoly(c)}, a{QPoly::x()}, b = BivPoly::x();
    auto f = division_values<BivPoly>(n, x, a, b);
    return x_only_division<BivPoly>(n, f, x * x * x + a * x + b);
}

QPoly resultant_in_b(const BivPoly& p, const BivPoly& q) {
    if (p.zero() || q.zero()) return {};
    int m = p.degree(), n = q.degree(), N = m + n;
    if (N == 0) return QPoly(Rational(1));
    std::vector<std::vector<QPoly>> M(N, std::vector<QPoly>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = q.coeff(n - j);
    QPoly prev(Rational(1));
    bool negate = false;
    for (int k = 0; k < N - 1; ++k) {
        int piv = k;
        while (piv < N && M[piv][k].zero()) ++piv;
        if (piv == N) return {};
        if (piv != k) {
            std::swap(M[piv], M[k]);
            negate = !negate;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = QPoly();
        }
        prev = M[k][k];
    }
    QPoly det = M[N - 1][N - 1];
    return negate ? -det : det;
}

namespace {

// upper bound on deg_a of the resultant
long resultant_degree_bound(const BivPoly& p, const BivPoly& q) {
    auto adeg = [](const BivPoly& f) {
        int d = 0;
        for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
        return static_cast<long>(d);
    };
    return p.degree() * adeg(q) + q.degree() * adeg(p);
}

template <class K, class Eval>
Poly<K> specialize(const BivPoly& f, Eval ev) {
    return f.map([&](const QPoly& c) { return ev(c); });
}

template <class K>
Poly<K> gcd_all(const std::vector<Poly<K>>& ps) {
    Poly<K> g;
    for (const auto& p : ps) g = g.zero() ? p : (p.zero() ? g : gcd(g, p));
    return g;
}

template <class F>
std::optional<InstanceRecord<F>> certify(const SurfaceSpec& spec, const std::array<int, 3>& orders, const F& a,
                                         const F& b) {
    WeierstrassCurve<F> E{a, b};
    if (is_zero(E.discriminant())) return std::nullopt;
    InstanceRecord<F> rec{a, b, {}, {}};
    for (int i = 0; i < 3; ++i) {
        auto c = torsion_order_x(F(spec.xcoords[i]), E, orders[i]);
        if (!c || orders[i] % c->order) fail(Errc::InvalidArgument, "eliminated solution failed certification");
        rec.orders[i] = c->order;
        rec.certificates[i] = *c;
    }
    return rec;
}

NumericOnlyRoot numeric_only(const QPoly& g, std::string reason) {
    NumericOnlyRoot r;
    r.minpoly_a = g;
    r.real_intervals = isolate_real_roots(g, Rational(1, Integer(1) << 64));
    r.nonreal_count = g.degree() - static_cast<int>(r.real_intervals.size());
    r.reason = std::move(reason);
    return r;
}

// b-values in the tower for a tower value of a.
std::optional<std::vector<QuadElem>> b_roots_tower(const Poly<QuadElem>& h) {
    if (h.degree() < 1) return std::vector<QuadElem>{};
    if (h.degree() == 1) return std::vector<QuadElem>{-h.coeff(0) / h.coeff(1)};
    bool rational = true;
    for (const auto& c : h.coeffs()) rational = rational && c.is_base();
    if (rational) {
        QPoly hq = h.map([](const QuadElem& c) { return c.base_part(); });
        std::vector<QuadElem> out;
        for (auto& [fac, e] : factor(hq).factors) {
            auto r = tower_roots(fac);
            if (!r) return std::nullopt;
            out.insert(out.end(), r->begin(), r->end());
        }
        return out;
    }
    if (h.degree() == 2) {
        Poly<QuadElem> m = monic(h);
        try {
            QuadElem s = quad_sqrt(m.coeff(1) * m.coeff(1) - QuadElem(Rational(4)) * m.coeff(0));
            QuadElem half(Rational(1, 2));
            return std::vector<QuadElem>{(s - m.coeff(1)) * half, (-s - m.coeff(1)) * half};
        } catch (const Error& e) {
            if (e.code() != Errc::NotASquare && e.code() != Errc::TowerDepthExceeded) throw;
        }
    }
    return std::nullopt;
}

}  // namespace

SolveResult solve_order_system(const SurfaceSpec& spec, const std::array<int, 3>& orders, const SearchConfig& cfg) {
    for (int n : orders)
        if (n < 2) fail(Errc::InvalidArgument, "orders must be at least 2");
    SolveResult res;
    res.orders = orders;

    std::array<BivPoly, 3> P;
    for (int i = 0; i < 3; ++i) {
        P[i] = division_poly_ab(orders[i], spec.xcoords[i]);
        if (spec.fixed_b) P[i] = BivPoly(P[i].eval<QPoly>(QPoly(*spec.fixed_b)));
    }

    if (!spec.fixed_b) {
        for (int i = 0; i < 3 && !res.witness; ++i)
            for (int j = i + 1; j < 3 && !res.witness; ++j) {
                if (orders[i] != 2 || orders[j] != 2) continue;
                int k = 3 - i - j;
                const Rational &ci = spec.xcoords[i], &cj = spec.xcoords[j];
                Rational a = -(ci * ci + ci * cj + cj * cj);
                Rational b = -ci * ci * ci - a * ci;
                auto f = division_values<Rational>(orders[k], spec.xcoords[k], a, b);
                Rational cubic = spec.xcoords[k] * spec.xcoords[k] * spec.xcoords[k] + a * spec.xcoords[k] + b;
                res.witness = LinearWitness{i, j, a, b, x_only_division<Rational>(orders[k], f, cubic)};
            }
    }

    // elimination ideal in a
    long bound = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (P[i].degree() > 0 && P[j].degree() > 0) bound += resultant_degree_bound(P[i], P[j]);
    if (bound > cfg.budget) fail(Errc::BudgetExceeded, "resultant degree bound exceeds the budget");
    std::vector<QPoly> elim;
    for (int i = 0; i < 3; ++i)
        if (P[i].degree() <= 0) elim.push_back(P[i].coeff(0));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (P[i].degree() > 0 && P[j].degree() > 0) {
                QPoly r = resultant_in_b(P[i], P[j]);
                res.resultant_degree += std::max(r.degree(), 0);
                elim.push_back(r);
            }
    QPoly G = gcd_all(elim);
    if (G.zero()) fail(Errc::Unsupported, "solution set is positive-dimensional");
    if (G.degree() < 1) return res;

    for (auto& [g, mult] : factor(G).factors) {
        (void)mult;
        if (auto roots = tower_roots(g)) {
            for (const QuadElem& alpha : *roots) {
                std::vector<Poly<QuadElem>> spec_polys;
                for (const auto& p : P)
                    spec_polys.push_back(specialize<QuadElem>(p, [&](const QPoly& c) { return c.eval(alpha); }));
                Poly<QuadElem> h = gcd_all(spec_polys);
                if (spec.fixed_b) {
                    if (auto rec = certify<QuadElem>(spec, orders, alpha, QuadElem(*spec.fixed_b)))
                        res.tower.push_back(*rec);
                    continue;
                }
                if (h.zero()) fail(Errc::Unsupported, "fiber over a is positive-dimensional");
                auto bs = b_roots_tower(h);
                if (!bs) {
                    res.numeric_only.push_back(numeric_only(g, "b outside the tower"));
                    break;
                }
                for (const QuadElem& b : *bs)
                    if (auto rec = certify<QuadElem>(spec, orders, alpha, b)) res.tower.push_back(*rec);
            }
            continue;
        }
        auto ctx = make_number_field(g, "alpha");
        AlgNum alpha = AlgNum::generator(ctx);
        if (spec.fixed_b) {
            if (auto rec = certify<AlgNum>(spec, orders, alpha, AlgNum(*spec.fixed_b))) res.algebraic.push_back(*rec);
            continue;
        }
        std::vector<Poly<AlgNum>> spec_polys;
        for (const auto& p : P) spec_polys.push_back(specialize<AlgNum>(p, [&](const QPoly& c) { return AlgNum(ctx, c); }));
        Poly<AlgNum> h = gcd_all(spec_polys);
        if (h.zero()) fail(Errc::Unsupported, "fiber over a is positive-dimensional");
        if (h.degree() < 1) continue;
        if (h.degree() > 1) {
            res.numeric_only.push_back(numeric_only(g, "b not in Q(a)"));
            continue;
        }
        AlgNum b = -h.coeff(0) / h.coeff(1);
        if (auto rec = certify<AlgNum>(spec, orders, alpha, b)) res.algebraic.push_back(*rec);
    }
    return res;
}

namespace {

template <class Job>
void run_parallel(size_t count, int threads, Job job) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                job(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<SolveResult> solve_all_orders(const SurfaceSpec& spec, int nmax, const SearchConfig& cfg) {
    std::vector<std::array<int, 3>> triples;
    for (int a = 2; a <= nmax; ++a)
        for (int b = 2; b <= nmax; ++b)
            for (int c = 2; c <= nmax; ++c) triples.push_back({a, b, c});
    std::vector<SolveResult> out(triples.size());
    run_parallel(triples.size(), cfg.threads, [&](size_t i) { out[i] = solve_order_system(spec, triples[i], cfg); });
    return out;
}

std::map<int, std::vector<CMInstance>> cm_surface_scan(int nmax, const SearchConfig& cfg) {
    if (nmax < 2) fail(Errc::InvalidArgument, "nmax must be at least 2");
    std::vector<QPoly> polys;
    long total = 0;
    for (int n = 2; n <= nmax; ++n) {
        polys.push_back(division_poly_ab(n, Rational(1)).coeff(0));
        total += polys.back().degree();
    }
    if (total > cfg.budget) fail(Errc::BudgetExceeded, "division polynomial degrees exceed the budget");

    std::vector<std::vector<CMInstance>> found(polys.size());
    run_parallel(polys.size(), cfg.threads, [&](size_t idx) {
        int n = static_cast<int>(idx) + 2;
        for (auto& [g, mult] : factor(polys[idx]).factors) {
            (void)mult;
            if (g == QPoly::x()) continue;  // a = 0 is singular
            if (auto roots = tower_roots(g)) {
                for (const QuadElem& a : *roots) {
                    WeierstrassCurve<QuadElem> E{a, QuadElem()};
                    auto cp = torsion_order_x(QuadElem(Rational(1)), E, n);
                    if (!cp || cp->order != n) break;  // conjugates share the order
                    auto cm = torsion_order_x(QuadElem(Rational(-1)), E, n);
                    if (!cm) fail(Errc::InvalidArgument, "x = -1 is not torsion of the expected order");
                    CMInstance inst;
                    inst.a_tower = a;
                    inst.minpoly = g;
                    inst.cert_plus = *cp;
                    inst.cert_minus = *cm;
                    found[idx].push_back(std::move(inst));
                }
                continue;
            }
            auto ctx = make_number_field(g, "theta");
            AlgNum a = AlgNum::generator(ctx);
            WeierstrassCurve<AlgNum> E{a, AlgNum()};
            auto cp = torsion_order_x(AlgNum(Rational(1)), E, n);
            if (!cp || cp->order != n) continue;
            auto cm = torsion_order_x(AlgNum(Rational(-1)), E, n);
            if (!cm) fail(Errc::InvalidArgument, "x = -1 is not torsion of the expected order");
            CMInstance inst;
            inst.in_tower = false;
            inst.a_alg = a;
            inst.minpoly = g;
            inst.cert_plus = *cp;
            inst.cert_minus = *cm;
            found[idx].push_back(std::move(inst));
        }
    });
    std::map<int, std::vector<CMInstance>> out;
    for (size_t i = 0; i < found.size(); ++i) out[static_cast<int>(i) + 2] = std::move(found[i]);
    return out;
}

AffineIdentity second_difference_identity(const std::array<Rational, 3>& xs) {
    // lambda annihilates (c_i) and (1): proportional to (c2 - c3, c3 - c1, c1 - c2)
    std::array<Rational, 3> l{xs[1] - xs[2], xs[2] - xs[0], xs[0] - xs[1]};
    Integer den = 1, g = 0;
    for (auto& v : l) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    AffineIdentity id;
    for (int i = 0; i < 3; ++i) {
        Rational s = l[i] * den;
        id.lambda[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), id.lambda[i].get_mpz_t());
    }
    int lead = sgn(id.lambda[0]) ? sgn(id.lambda[0]) : sgn(id.lambda[1]);
    for (auto& v : id.lambda) v = v / g * lead;
    for (int i = 0; i < 3; ++i) {
        Rational li(id.lambda[i]);
        id.a_coeff += li * xs[i];
        id.b_coeff += li;
        id.constant += li * xs[i] * xs[i] * xs[i];
    }
    Rational c3[3], c1[3];
    for (int i = 0; i < 3; ++i) {
        c3[i] = xs[i] * xs[i] * xs[i];
        c1[i] = xs[i];
    }
    Rational det = c3[0] * (c1[1] - c1[2]) - c1[0] * (c3[1] - c3[2]) + (c3[1] * c1[2] - c1[1] * c3[2]);
    id.determinant = det;
    return id;
}

}  // namespace ect
