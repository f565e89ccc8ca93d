#include "cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ect/analytic/periods.hpp"
#include "ect/analytic/relations.hpp"
#include "ect/analytic/roots.hpp"
#include "ect/errors.hpp"
#include "ect/ff/heights.hpp"
#include "ect/search/search.hpp"
#include "ect/tate/tate.hpp"
#include "ect/tate/units.hpp"

namespace ect::cli {

const char* const kVersion = "ect " ECT_VERSION;

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c = {"search", "cmscan", "verify", "periods", "theta",
                                               "tate-a4a6", "tate-units", "ffheights", "siegel", "count"};
    return c;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

struct ValidationError : std::runtime_error {
    std::vector<SchemaIssue> issues;
    explicit ValidationError(std::vector<SchemaIssue> i)
        : std::runtime_error("input does not match the schema"), issues(std::move(i)) {}
};

[[noreturn]] void invalid(const std::string& path, const std::string& msg) { throw ValidationError({{path, msg}}); }

// ---- encoders --------------------------------------------------------------

json q(const Rational& x) { return to_string(x); }
json z(const Integer& x) { return to_string(x); }

json coeff_list(const QPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(q(c));
    return a;
}

json enc(const QuadElem& x) {
    std::vector<Integer> rads = x.support();
    std::vector<Integer> tower = canonical_tower(rads);
    TowerCoords tc = tower_coords(x, tower);
    json t = json::array(), c = json::array();
    for (const auto& d : tc.tower) t.push_back(z(d));
    for (const auto& r : tc.coords) c.push_back(q(r));
    return {{"value", to_string(x)}, {"tower", t}, {"coords", c}};
}

json enc(const AlgNum& x) {
    QPoly mod = x.ctx() ? x.ctx()->modulus : QPoly({Rational(0), Rational(1)});
    json c = coeff_list(x.value());
    if (c.empty()) c.push_back("0");
    return {{"value", x.str()}, {"minpoly", coeff_list(mod)}, {"coords", c}};
}

template <class F>
json enc_cert(const TorsionCertificate<F>& c) {
    json w = json::array();
    for (const auto& [m, v] : c.witness) w.push_back({{"m", m}, {"value", enc(v)}});
    return {{"order", c.order}, {"witness", w}, {"vanishing", enc(c.vanishing)}};
}

template <class F>
json enc_record(const InstanceRecord<F>& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(enc_cert(c));
    return {{"a", enc(r.a)}, {"b", enc(r.b)}, {"orders", r.orders}, {"certificates", certs}};
}

json enc(const BigFloat& x, long digits) { return x.is_zero() ? std::string("0") : x.str(digits); }
json enc(const BigComplex& x, long digits) { return {{"re", enc(x.re, digits)}, {"im", enc(x.im, digits)}}; }

// ---- decoders --------------------------------------------------------------

Rational dq(const json& v) { return parse_rational(v.get<std::string>()); }
Integer dz(const json& v) { return Integer(v.get<std::string>()); }

std::array<Rational, 3> rational3(const json& v) { return {dq(v[0]), dq(v[1]), dq(v[2])}; }

QPoly dpoly(const json& v) {
    std::vector<Rational> c;
    for (const auto& x : v) c.push_back(dq(x));
    return QPoly(c);
}

QuadElem dquad(const json& v) {
    std::vector<Integer> tower;
    std::vector<Rational> coords;
    for (const auto& d : v["tower"]) tower.push_back(dz(d));
    for (const auto& c : v["coords"]) coords.push_back(dq(c));
    return from_tower_coords(tower, coords);
}

struct AlgDecoder {
    NumberFieldPtr ctx;
    AlgNum operator()(const json& v) {
        QPoly mod = dpoly(v["minpoly"]);
        QPoly val = dpoly(v["coords"]);
        if (mod.degree() <= 1) return AlgNum(val.coeff(0));
        if (!ctx || ctx->modulus != mod) ctx = make_number_field(mod);
        return AlgNum(ctx, val);
    }
};

template <class F, class D>
TorsionCertificate<F> dcert(const json& v, D&& dec) {
    TorsionCertificate<F> c;
    c.order = v["order"].get<int>();
    for (const auto& w : v["witness"]) c.witness.push_back({w["m"].get<int>(), dec(w["value"])});
    c.vanishing = dec(v["vanishing"]);
    return c;
}

// ---- commands --------------------------------------------------------------

json solve_result(const SolveResult& r) {
    json tower = json::array(), alg = json::array(), num = json::array();
    for (const auto& rec : r.tower) tower.push_back(enc_record(rec));
    for (const auto& rec : r.algebraic) alg.push_back(enc_record(rec));
    for (const auto& n : r.numeric_only) {
        json iv = json::array();
        for (const auto& i : n.real_intervals) iv.push_back({q(i.lo), q(i.hi)});
        num.push_back({{"minpoly_a", coeff_list(n.minpoly_a)},
                       {"real_intervals", iv},
                       {"nonreal_count", n.nonreal_count},
                       {"reason", n.reason}});
    }
    json w = nullptr;
    if (r.witness)
        w = {{"i", r.witness->i}, {"j", r.witness->j}, {"a", q(r.witness->a)}, {"b", q(r.witness->b)},
             {"residual", q(r.witness->residual)}};
    return {{"orders", r.orders}, {"resultant_degree", r.resultant_degree}, {"tower", tower},
            {"algebraic", alg},   {"numeric_only", num},                    {"witness", w}};
}

json cmd_search(const JobConfig& cfg, const json& in) {
    std::array<Rational, 3> xs = in.contains("spec") ? rational3(in["spec"]) : std::array<Rational, 3>{1, 2, 3};
    std::optional<Rational> fixed_b;
    if (in.contains("fixed_b")) fixed_b = dq(in["fixed_b"]);
    if (in.contains("orders") == in.contains("nmax")) invalid("/orders", "give exactly one of orders and nmax");
    SurfaceSpec spec = make_surface_spec(xs, fixed_b);
    SearchConfig sc{cfg.budget, cfg.threads};
    json results = json::array();
    if (in.contains("orders")) {
        results.push_back(solve_result(solve_order_system(spec, in["orders"].get<std::array<int, 3>>(), sc)));
    } else {
        for (const auto& r : solve_all_orders(spec, in["nmax"].get<int>(), sc)) results.push_back(solve_result(r));
    }
    json fb = fixed_b ? q(*fixed_b) : json(nullptr);
    return {{"spec", {{"xcoords", {q(xs[0]), q(xs[1]), q(xs[2])}}, {"fixed_b", fb}}}, {"results", results}};
}

json cmd_cmscan(const JobConfig& cfg, const json& in) {
    int nmax = in.value("nmax", 5);
    auto scan = cm_surface_scan(nmax, SearchConfig{cfg.budget, cfg.threads});
    json orders = json::array();
    for (const auto& [n, list] : scan) {
        json insts = json::array();
        for (const auto& inst : list) {
            auto cert = [](const auto& c) { return std::visit([](const auto& x) { return enc_cert(x); }, c); };
            insts.push_back({{"in_tower", inst.in_tower},
                             {"a", inst.in_tower ? enc(inst.a_tower) : enc(inst.a_alg)},
                             {"minpoly", coeff_list(inst.minpoly)},
                             {"conjugates", inst.conjugates()},
                             {"cert_plus", cert(inst.cert_plus)},
                             {"cert_minus", cert(inst.cert_minus)}});
        }
        orders.push_back({{"N", n}, {"instances", insts}});
    }
    return {{"nmax", nmax}, {"orders", orders}};
}

template <class F, class D>
bool verify_record(const json& rec, const std::array<Rational, 3>& xs, D&& dec) {
    WeierstrassCurve<F> E{dec(rec["a"]), dec(rec["b"])};
    auto orders = rec["orders"].get<std::array<int, 3>>();
    for (int i = 0; i < 3; ++i) {
        TorsionCertificate<F> c = dcert<F>(rec["certificates"][i], dec);
        F x0 = F(xs[static_cast<size_t>(i)]);
        if (c.order != orders[static_cast<size_t>(i)] || !verify_certificate(c, x0, E)) return false;
        auto again = torsion_order_x(x0, E, c.order);
        if (!again || again->order != c.order) return false;
    }
    return true;
}

json cmd_verify(const JobConfig&, const json& in) {
    std::array<Rational, 3> xs = rational3(in["spec"]["xcoords"]);
    json records = json::array();
    bool all_ok = true;
    long checked = 0;
    for (const auto& res : in["results"]) {
        for (const auto& rec : res["tower"]) {
            bool ok = verify_record<QuadElem>(rec, xs, [](const json& v) { return dquad(v); });
            records.push_back({{"orders", rec["orders"]}, {"kind", "tower"}, {"ok", ok}});
            all_ok = all_ok && ok;
            ++checked;
        }
        for (const auto& rec : res["algebraic"]) {
            AlgDecoder dec;
            bool ok = verify_record<AlgNum>(rec, xs, dec);
            records.push_back({{"orders", rec["orders"]}, {"kind", "algebraic"}, {"ok", ok}});
            all_ok = all_ok && ok;
            ++checked;
        }
    }
    return {{"checked", checked}, {"all_ok", all_ok}, {"records", records}};
}

// Numbers given as rationals, decimals, {re, im} or tower elements.  Tower
// elements are embedded with one common choice of signs.
struct NumberReader {
    mpfr_prec_t bits;
    long embedding = 0;
    std::vector<Integer> tower;
    long count = 1;

    void scan(const json& v) {
        if (!v.is_object() || !v.contains("tower")) return;
        for (const auto& d : dquad(v).support()) tower.push_back(d);
    }
    void finish(long choice) {
        tower = canonical_tower(tower);
        count = 1L << tower.size();
        if (choice < 0 || choice >= count) invalid("/embedding", "only " + std::to_string(count) + " embeddings");
        embedding = choice;
    }
    BigComplex sqrt_of(const Integer& d, bool neg) const {
        BigComplex r = sqrt(BigComplex(BigFloat(d, bits)));
        return neg ? -r : r;
    }
    BigComplex read(const json& v, const std::string& path) const {
        if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (s.find_first_of(".eE") != std::string::npos) return BigComplex(BigFloat(s, bits));
            return BigComplex::from_rational(parse_rational(s), bits);
        }
        if (v.contains("re")) return {BigFloat(v["re"].get<std::string>(), bits), BigFloat(v["im"].get<std::string>(), bits)};
        if (!v.contains("tower")) invalid(path, "not a number");
        TowerCoords tc = tower_coords(dquad(v), tower);
        std::vector<BigComplex> basis{BigComplex(BigFloat(1L, bits))};
        for (size_t k = 0; k < tower.size(); ++k) {
            BigComplex s = sqrt_of(tower[k], (embedding >> k) & 1);
            size_t n = basis.size();
            for (size_t i = 0; i < n; ++i) basis.push_back(basis[i] * s);
        }
        BigComplex out(bits);
        for (size_t i = 0; i < tc.coords.size(); ++i)
            out += BigComplex::from_rational(tc.coords[i], bits) * basis[i];
        return snap_real(out);
    }
};

json cmd_periods(const JobConfig& cfg, const json& in) {
    json out = {{"digits", cfg.prec}, {"basis", nullptr}, {"samples", json::array()}, {"max_error", nullptr}};
    if (in.contains("lambda")) {
        NumberReader rd{digits_to_bits(cfg.prec, kGuardDigits)};
        rd.scan(in["lambda"]);
        rd.finish(0);
        PeriodBasis B = periods_legendre(rd.read(in["lambda"], "/lambda"), cfg.prec);
        out["basis"] = {{"lambda", enc(B.lambda, cfg.prec)},
                        {"e", {enc(B.e[0], cfg.prec), enc(B.e[1], cfg.prec), enc(B.e[2], cfg.prec)}},
                        {"omega1", enc(B.omega1, cfg.prec)},
                        {"omega2", enc(B.omega2, cfg.prec)},
                        {"tau", enc(B.tau(), cfg.prec)},
                        {"reconstruction_error", enc(reconstruction_error(B), 6)}};
    }
    if (in.contains("samples")) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<long> num(-60, 60), den(1, 30);
        BigFloat worst(0L, 64);
        for (int s = 0; s < in["samples"].get<int>(); ++s) {
            Rational l;
            do l = make_rational(num(rng), den(rng));
            while (l == 0 || l == 1);
            BigFloat err = reconstruction_error(periods_legendre(l, cfg.prec));
            if (err > worst) worst = err;
            out["samples"].push_back({{"lambda", q(l)}, {"reconstruction_error", enc(err, 6)}});
        }
        out["max_error"] = enc(worst, 6);
    }
    return out;
}

json cmd_theta(const JobConfig& cfg, const json& in) {
    NumberReader rd{digits_to_bits(cfg.prec, kGuardDigits)};
    rd.scan(in["a"]);
    rd.scan(in["b"]);
    for (const auto& x : in["xs"]) rd.scan(x);
    rd.finish(in.value("embedding", 0L));
    BigComplex a = rd.read(in["a"], "/a"), b = rd.read(in["b"], "/b");
    std::array<BigComplex, 3> xs;
    for (size_t i = 0; i < 3; ++i) xs[i] = rd.read(in["xs"][i], "/xs/" + std::to_string(i));
    WeierstrassTheta wt = weierstrass_theta(a, b, xs, cfg.prec);
    long N = in.value("N", 12L);
    mpfr_prec_t bits = rd.bits;
    BigFloat tol = pow10(-(cfg.prec / 2), bits);
    if (!(tol < BigFloat(Rational(1, 2 * N), bits))) fail(Errc::AmbiguousTolerance, "N is too large for this precision");
    json xi = json::array(), hits = json::array();
    for (const auto& x : wt.theta.xi) {
        xi.push_back(enc(x, cfg.prec));
        auto h = rationality_detect(x, Integer(N), tol);
        if (h)
            hits.push_back({{"p", z(h->p)}, {"N", z(h->N)}, {"value", q(h->value())}});
        else
            hits.push_back(nullptr);
    }
    return {{"a", enc(a, cfg.prec)},
            {"b", enc(b, cfg.prec)},
            {"xs", {enc(xs[0], cfg.prec), enc(xs[1], cfg.prec), enc(xs[2], cfg.prec)}},
            {"lambda", enc(wt.model.lambda, cfg.prec)},
            {"digits", cfg.prec},
            {"embedding", rd.embedding},
            {"embedding_count", rd.count},
            {"N", N},
            {"tolerance", enc(tol, 3)},
            {"xi", xi},
            {"rational", hits}};
}

json cmd_tate_a4a6(const JobConfig&, const json& in) {
    long K = in.value("K", 10L);
    json a4 = json::array(), a6 = json::array();
    for (const auto& c : a4_coefficients(K)) a4.push_back(z(c));
    for (const auto& c : a6_coefficients(K)) a6.push_back(z(c));
    return {{"K", K}, {"a4", a4}, {"a6", a6}};
}

json cmd_tate_units(const JobConfig&, const json& in) {
    json out = {{"pair", nullptr}, {"triple", nullptr}};
    if (!in.contains("pair") && !in.contains("triple")) invalid("/pair", "give pair or triple");
    if (in.contains("pair")) {
        int i = in["pair"][0].get<int>(), j = in["pair"][1].get<int>();
        if (i == j) invalid("/pair", "indices must differ");
        auto u = unit_from_reduction(i, j);
        QuadElem norm = u[0] * u[1];
        Rational target = (make_rational(j, i) - 1) / 12;
        bool red = reduction_x(u[0]) == QuadElem(target) && reduction_x(u[1]) == QuadElem(target);
        out["pair"] = {{"i", i},
                       {"j", j},
                       {"roots", {enc(u[0]), enc(u[1])}},
                       {"norm", q(norm.base_part())},
                       {"norm_check", norm == QuadElem(Rational(1))},
                       {"reduction", q(target)},
                       {"reduction_check", red}};
    }
    if (in.contains("triple")) {
        auto t = in["triple"].get<std::array<int, 3>>();
        long bound = in.value("bound", 50L);
        UnitPair up = unit_pair(t[0], t[1], t[2]);
        IndependenceResult r = mult_independence(up.u[0], up.u_prime[0], bound);
        json rel = nullptr;
        if (!r.independent) rel = {{"M", r.M}, {"N", r.N}, {"sign", r.sign}};
        out["triple"] = {{"context", up.context},
                         {"u", {enc(up.u[0]), enc(up.u[1])}},
                         {"u_prime", {enc(up.u_prime[0]), enc(up.u_prime[1])}},
                         {"independent", r.independent},
                         {"relation", rel},
                         {"u_totally_real", r.u_totally_real},
                         {"u_prime_totally_real", r.u_prime_totally_real},
                         {"roots_of_unity_excluded", r.roots_of_unity_excluded},
                         {"bound", bound}};
    }
    return out;
}

RatFunc read_ratfunc(const json& v, const std::string& path) {
    try {
        return parse_ratfunc(v.get<std::string>());
    } catch (const Error& e) {
        invalid(path, e.what());
    }
}

json error_field(const Error& e) { return {{"error", e.what()}}; }

json cmd_ffheights(const JobConfig&, const json& in) {
    if (in.contains("curve") == in.contains("legendre")) invalid("/curve", "give exactly one of curve and legendre");
    CurveOverFF E = in.contains("curve")
                        ? make_curve_ff(read_ratfunc(in["curve"][0], "/curve/0"), read_ratfunc(in["curve"][1], "/curve/1"))
                        : curve_ff_from_legendre(read_ratfunc(in["legendre"], "/legendre"));
    std::array<RatFunc, 3> xs{RatFunc(Rational(1)), RatFunc(Rational(2)), RatFunc(Rational(3))};
    json pts = in.value("points", json("auto123"));
    if (pts.is_array())
        for (size_t i = 0; i < 3; ++i) xs[i] = read_ratfunc(pts[i], "/points/" + std::to_string(i));

    json out;
    out["curve"] = {{"a", to_string(E.a)}, {"b", to_string(E.b)}, {"discriminant", to_string(E.discriminant())},
                    {"j", to_string(E.j())}};
    std::array<FFPoint, 3> P;
    json points = json::array();
    for (size_t i = 0; i < 3; ++i) {
        P[i] = ff_point_from_x(xs[i], E);
        points.push_back({{"x", to_string(P[i].x)}, {"c", to_string(P[i].c)}, {"d", to_string(P[i].d)}});
    }
    out["points"] = points;
    json bad = json::array();
    for (const auto& r : bad_places(E)) {
        json vj = r.v_j == kInfiniteValuation ? json("inf") : json(r.v_j);
        json split = r.split ? json(*r.split) : json(nullptr);
        bad.push_back({{"place", r.place.str()}, {"degree", r.place.degree()}, {"type", to_string(r.type)},
                       {"v_delta", r.v_delta}, {"v_j", vj}, {"semistable", r.semistable}, {"split", split}});
    }
    out["bad_places"] = bad;
    try {
        SiSets s = si_sets(E, xs);
        json S = json::array(), recs = json::array();
        for (const auto& set : s.S) {
            json l = json::array();
            for (const auto& v : set) l.push_back(v.str());
            S.push_back(l);
        }
        for (const auto& r : s.records) {
            json red = json::array();
            for (const auto& x : r.reduced_xt) red.push_back(x ? json(x->str()) : json(nullptr));
            recs.push_back({{"place", r.place.str()}, {"singular", r.singular}, {"reduced_xt", red}, {"law_holds", r.law_holds}});
        }
        out["s_sets"] = {{"S", S}, {"records", recs}};
    } catch (const Error& e) {
        out["s_sets"] = error_field(e);
    }
    json local = json::array(), hhat = json::array();
    std::vector<Place> places = relevant_places(E);
    for (size_t i = 0; i < 3; ++i) {
        json l = json::array();
        for (const auto& v : places) {
            try {
                l.push_back({{"place", v.str()}, {"value", q(local_height(P[i], E, v))}});
            } catch (const Error& e) {
                l.push_back({{"place", v.str()}, {"value", nullptr}, {"note", errc_name(e.code())}});
            }
        }
        local.push_back(l);
        try {
            HeightResult h = canonical_height(P[i], E);
            json parts = json::array();
            for (const auto& [v, val] : h.local) parts.push_back({{"place", v.str()}, {"value", q(val)}});
            hhat.push_back({{"value", q(h.value)}, {"multiplier", h.multiplier}, {"torsion", h.torsion}, {"local", parts}});
        } catch (const Error& e) {
            hhat.push_back(error_field(e));
        }
    }
    out["local_heights"] = local;
    out["hhat"] = hhat;
    try {
        Gram g = gram_matrix(P, E);
        json m = json::array();
        for (const auto& row : g) m.push_back({q(row[0]), q(row[1]), q(row[2])});
        int rank = matrix_rank(g);
        out["gram"] = {{"matrix", m}, {"psd", positive_semidefinite(g)}, {"rank_lb", rank}};
        out["rank_lb"] = rank;
    } catch (const Error& e) {
        out["gram"] = error_field(e);
        out["rank_lb"] = nullptr;
    }
    return out;
}

json cmd_siegel(const JobConfig&, const json& in) {
    Integer N = dz(in["N"]), R = dz(in["R"]);
    if (N < 1 || R < 1) invalid("/N", "moduli must be positive");
    TorsionCoords c;
    for (size_t r = 0; r < 2; ++r)
        for (size_t k = 0; k < 3; ++k) c[r][k] = dz(in["coords"][r][k]);
    RelationVector v = siegel_relation(N, R, c);
    json chi = json::array(), ext = json::array();
    for (const auto& x : v.chi) chi.push_back(z(x));
    for (const auto& x : v.extended) ext.push_back(z(x));
    Integer cube = v.norm * v.norm * v.norm;
    return {{"N", z(N)},       {"R", z(R)}, {"chi", chi}, {"extended", ext}, {"norm", z(v.norm)},
            {"proven_minimal", v.proven_minimal}, {"minkowski_bound_holds", cube <= N * R}};
}

json cmd_count(const JobConfig&, const json& in) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& p : in["points"]) {
        std::vector<Rational> v;
        for (const auto& c : p) v.push_back(dq(c));
        pts.push_back(v);
    }
    Integer T = dz(in["T"]);
    return {{"T", z(T)}, {"total", pts.size()}, {"count", counting_function(pts, T)}};
}

json dispatch(const JobConfig& cfg, const json& in) {
    const std::string& c = cfg.command;
    if (c == "search") return cmd_search(cfg, in);
    if (c == "cmscan") return cmd_cmscan(cfg, in);
    if (c == "verify") return cmd_verify(cfg, in);
    if (c == "periods") return cmd_periods(cfg, in);
    if (c == "theta") return cmd_theta(cfg, in);
    if (c == "tate-a4a6") return cmd_tate_a4a6(cfg, in);
    if (c == "tate-units") return cmd_tate_units(cfg, in);
    if (c == "ffheights") return cmd_ffheights(cfg, in);
    if (c == "siegel") return cmd_siegel(cfg, in);
    return cmd_count(cfg, in);
}

json error_doc(const JobConfig& cfg, const std::string& code, const std::string& msg,
               const std::vector<SchemaIssue>& issues = {}) {
    json e = {{"code", code}, {"message", msg}};
    if (!issues.empty()) {
        json l = json::array();
        for (const auto& i : issues) l.push_back({{"path", i.path}, {"message", i.message}});
        e["issues"] = l;
    }
    return {{"version", kVersion}, {"command", cfg.command}, {"error", e}};
}

}  // namespace

RunResult run(const JobConfig& cfg, const json& input) {
    const auto& cmds = commands();
    if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end())
        return {error_doc(cfg, "InvalidArgument", "unknown command"), 2};
    std::vector<SchemaIssue> cfg_issues;
    if (cfg.prec < 20) cfg_issues.push_back({"/config/prec", "precision must be at least 20 digits"});
    if (cfg.budget < 1) cfg_issues.push_back({"/config/budget", "budget must be positive"});
    if (cfg.threads < 1) cfg_issues.push_back({"/config/threads", "threads must be positive"});
    if (!cfg_issues.empty()) return {error_doc(cfg, "ValidationFailed", "invalid configuration", cfg_issues), 2};

    json in = input;
    if (cfg.command == "verify" && in.contains("result") && in.contains("version")) in = in["result"];
    auto issues = validate(in, schema(cfg.command + ".input"));
    if (!issues.empty()) return {error_doc(cfg, "ValidationFailed", "input does not match the schema", issues), 2};
    try {
        json result = dispatch(cfg, in);
        json doc = {{"version", kVersion},
                    {"command", cfg.command},
                    {"config", {{"prec", cfg.prec}, {"budget", cfg.budget}, {"seed", cfg.seed}}},
                    {"result", result}};
        int code = 0;
        if (cfg.command == "verify" && !result["all_ok"].get<bool>()) code = 2;
        return {doc, code};
    } catch (const ValidationError& e) {
        return {error_doc(cfg, "ValidationFailed", e.what(), e.issues), 2};
    } catch (const Error& e) {
        return {error_doc(cfg, errc_name(e.code()), e.what()), errc_exit_code(e.code())};
    } catch (const std::exception& e) {
        return {error_doc(cfg, "InvalidArgument", e.what()), 2};
    }
}

}  // namespace ect::cli
