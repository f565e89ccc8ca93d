#include "ect/arith/poly_q.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>

namespace ect {

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1) os << to_string(a) << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Rational content(const QPoly& p) {
    if (p.zero()) return 0;
    Integer num = 0, den = 1;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r = make_rational(num, den);
    if (sgn(p.lc()) < 0) r = -r;
    return r;
}

QPoly primitive_part(const QPoly& p) {
    if (p.zero()) return p;
    Rational c = content(p);
    return p.scaled(Rational(1 / c));
}

bool poly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        Rational x = a.coeff(k), y = b.coeff(k);
        if (x != y) return x < y;
    }
    return false;
}

namespace {

// ---- small prime-field polynomial arithmetic -------------------------------

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pw(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pw(a, p - 2); }

    void trim(FpPoly& f) const {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        trim(r);
        return r;
    }
    std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
        if (a.size() < b.size()) return {{}, a};
        const size_t db = b.size() - 1;
        FpPoly q(a.size() - db, 0);
        u64 il = inv(b.back());
        for (size_t i = a.size() - 1;; --i) {
            u64 c = mul(a[i], il);
            q[i - db] = c;
            if (c)
                for (size_t j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(c, b[j]));
            if (i == db) break;
        }
        a.resize(db);
        trim(a);
        trim(q);
        return {q, a};
    }
    FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
    FpPoly monic(FpPoly f) const {
        if (f.empty()) return f;
        u64 il = inv(f.back());
        for (auto& c : f) c = mul(c, il);
        return f;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s a + t b = 1 assuming coprime
    void bezout(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
        FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            r0 = r1;
            r1 = r;
            FpPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        u64 il = inv(r0.at(0));
        for (auto& c : s0) c = mul(c, il);
        for (auto& c : t0) c = mul(c, il);
        s = s0;
        t = t0;
        trim(s);
        trim(t);
    }
    FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) const {
        FpPoly r{1};
        base = mod(base, m);
        size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
        }
        return r;
    }
    FpPoly deriv(const FpPoly& f) const {
        if (f.size() <= 1) return {};
        FpPoly r(f.size() - 1);
        for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p);
        trim(r);
        return r;
    }
};

u64 mod_p(const Integer& a, u64 p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
    return r.get_ui();
}

FpPoly reduce(const std::vector<Integer>& f, const Fp& F) {
    FpPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = mod_p(f[i], F.p);
    F.trim(r);
    return r;
}

void equal_degree_split(const Fp& F, const FpPoly& g, size_t d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    if (g.size() - 1 == d) {
        out.push_back(g);
        return;
    }
    Integer e = pow(Integer(static_cast<unsigned long>(F.p)), d);
    e = (e - 1) / 2;
    for (;;) {
        FpPoly a(g.size() - 1);
        for (auto& c : a) c = rng() % F.p;
        F.trim(a);
        if (a.size() < 2) continue;
        FpPoly b = F.powmod(a, e, g);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        F.trim(b);
        FpPoly h = F.gcd(g, b);
        if (h.size() > 1 && h.size() < g.size()) {
            equal_degree_split(F, h, d, rng, out);
            equal_degree_split(F, F.divmod(g, h).first, d, rng, out);
            return;
        }
    }
}

// Monic square-free f over F_p into monic irreducibles.
std::vector<FpPoly> factor_mod_p(const Fp& F, FpPoly f) {
    std::vector<FpPoly> out;
    std::mt19937_64 rng(0x5eed + F.p);
    FpPoly x{0, 1}, h = x;
    Integer P(static_cast<unsigned long>(F.p));
    for (size_t d = 1; f.size() - 1 >= 2 * d; ++d) {
        h = F.powmod(h, P, f);
        FpPoly g = F.gcd(f, F.sub(h, x));
        if (g.size() > 1) {
            equal_degree_split(F, g, d, rng, out);
            f = F.divmod(f, g).first;
            h = F.mod(h, f);
        }
    }
    if (f.size() > 1) out.push_back(F.monic(f));
    return out;
}

// ---- integer polynomials ---------------------------------------------------

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}
ZPoly zmod(ZPoly f, const Integer& m) {
    for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(f);
    return f;
}
ZPoly zsym(ZPoly f, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(f);
    return f;
}
ZPoly from_fp(const FpPoly& f) {
    ZPoly r;
    for (u64 c : f) r.push_back(Integer(static_cast<unsigned long>(c)));
    return r;
}
ZPoly to_z(const QPoly& p) {
    ZPoly r;
    for (const auto& c : p.coeffs()) r.push_back(c.get_num());
    return r;
}
QPoly to_q(const ZPoly& f) {
    std::vector<Rational> v;
    for (const auto& c : f) v.emplace_back(c);
    return QPoly(std::move(v));
}

// Lift f = G*H (mod p), G monic, to modulus p^k.
void hensel_lift(const ZPoly& f, ZPoly& G, ZPoly& H, const Fp& F, unsigned k) {
    FpPoly g = reduce(G, F), h = reduce(H, F), s, t;
    F.bezout(g, h, s, t);
    Integer pj = F.p;
    Integer P(static_cast<unsigned long>(F.p));
    for (unsigned j = 1; j < k; ++j) {
        ZPoly gh = zmul(G, H);
        ZPoly e(std::max(f.size(), gh.size()), Integer(0));
        for (size_t i = 0; i < f.size(); ++i) e[i] += f[i];
        for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        for (auto& c : e) c /= pj;  // exact
        FpPoly ep = reduce(e, F);
        auto [q, r] = F.divmod(F.mul(ep, t), g);
        FpPoly dG = r;
        FpPoly dH = F.mul(ep, s);
        FpPoly qh = F.mul(q, h);
        dH.resize(std::max(dH.size(), qh.size()), 0);
        for (size_t i = 0; i < qh.size(); ++i) dH[i] = F.add(dH[i], qh[i]);
        F.trim(dH);
        ZPoly zg = from_fp(dG), zh = from_fp(dH);
        G.resize(std::max(G.size(), zg.size()), Integer(0));
        H.resize(std::max(H.size(), zh.size()), Integer(0));
        for (size_t i = 0; i < zg.size(); ++i) G[i] += pj * zg[i];
        for (size_t i = 0; i < zh.size(); ++i) H[i] += pj * zh[i];
        pj *= P;
        G = zmod(G, pj);
        H = zmod(H, pj);
    }
}

Integer isqrt_ceil(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) ++r;
    return r;
}

bool divides_exactly(const QPoly& g, const QPoly& f, QPoly& quotient) {
    auto [q, r] = divmod(f, g);
    if (!r.zero()) return false;
    for (const auto& c : q.coeffs())
        if (c.get_den() != 1) return false;
    quotient = q;
    return true;
}

// Irreducible factors of a primitive square-free integer polynomial with
// nonzero constant term and positive leading coefficient.
std::vector<QPoly> zassenhaus(const QPoly& f) {
    const int n = f.degree();
    if (n <= 1) return {f};
    ZPoly fz = to_z(f);
    const Integer ln = fz.back();

    static const u64 primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
                                 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                                 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};
    u64 best_p = 0;
    std::vector<FpPoly> best;
    int good = 0;
    for (u64 p : primes) {
        if (mod_p(ln, p) == 0) continue;
        Fp F{p};
        FpPoly fp = reduce(fz, F);
        if (F.gcd(fp, F.deriv(fp)).size() != 1) continue;
        auto fac = factor_mod_p(F, F.monic(fp));
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = fac;
        }
        if (best.size() == 1 || ++good >= 8) break;
    }
    if (best_p == 0) fail(Errc::Unsupported, "no suitable prime for factorization");
    if (best.size() == 1) return {f};

    Fp F{best_p};
    Integer norm2 = 0;
    for (const auto& c : fz) norm2 += c * c;
    Integer bound = abs(ln) * pow(Integer(2), static_cast<unsigned long>(n)) * isqrt_ceil(norm2);
    bound = 2 * bound + 1;
    unsigned k = 1;
    Integer M = best_p;
    while (M <= bound) {
        M *= static_cast<unsigned long>(best_p);
        ++k;
    }

    // sequential two-factor lifting
    std::vector<ZPoly> lifted;
    ZPoly cur = fz;
    for (size_t i = 0; i + 1 < best.size(); ++i) {
        ZPoly G = from_fp(best[i]);
        FpPoly rest{mod_p(cur.back(), best_p)};
        for (size_t j = i + 1; j < best.size(); ++j) rest = F.mul(rest, best[j]);
        ZPoly H = from_fp(rest);
        hensel_lift(cur, G, H, F, k);
        lifted.push_back(G);
        cur = H;
    }
    {
        // last: make monic mod M
        Integer inv;
        Integer lcur = cur.back();
        mpz_invert(inv.get_mpz_t(), lcur.get_mpz_t(), M.get_mpz_t());
        for (auto& c : cur) c *= inv;
        lifted.push_back(zmod(cur, M));
    }

    std::vector<QPoly> out;
    QPoly rem = f;
    std::vector<ZPoly> pool = lifted;
    auto next_combination = [](std::vector<size_t>& idx, size_t n) {
        size_t s = idx.size();
        for (size_t i = s; i-- > 0;) {
            if (idx[i] < n - s + i) {
                ++idx[i];
                for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (size_t s = 1; 2 * s <= pool.size();) {
        bool found = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            Integer lr = to_z(rem).back();
            ZPoly g{lr};
            for (size_t i : idx) g = zsym(zmul(g, pool[i]), M);
            QPoly cand = primitive_part(to_q(g));
            QPoly quo;
            if (cand.degree() > 0 && divides_exactly(cand, rem, quo)) {
                out.push_back(cand);
                rem = quo;
                std::vector<ZPoly> np;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                pool = np;
                found = true;
                break;
            }
        } while (next_combination(idx, pool.size()));
        if (!found) ++s;
    }
    if (rem.degree() > 0) out.push_back(primitive_part(rem));
    return out;
}

bool is_prime_u32(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

// Modular gcd: images modulo word-size primes combined by CRT, accepted once
// the lift stabilises and divides both inputs.
QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.zero()) return monic(b);
    if (b.zero()) return monic(a);
    if (a.degree() == 0 || b.degree() == 0) return QPoly(Rational(1));
    ZPoly A = to_z(primitive_part(a)), B = to_z(primitive_part(b));
    Integer l;
    mpz_gcd(l.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
    QPoly pa = to_q(A), pb = to_q(B);
    int deg = std::min(a.degree(), b.degree()) + 1;
    ZPoly H, prev;
    Integer M = 1;
    u64 p = (u64(1) << 31) - 1;
    for (;; p -= 2) {
        if (!is_prime_u32(p) || mod_p(l, p) == 0) continue;
        Fp F{p};
        FpPoly gp = F.gcd(reduce(A, F), reduce(B, F));
        if (gp.empty()) continue;
        int d = static_cast<int>(gp.size()) - 1;
        if (d == 0) return QPoly(Rational(1));
        if (d > deg) continue;
        u64 lp = mod_p(l, p);
        for (auto& c : gp) c = F.mul(c, lp);
        if (d < deg) {
            deg = d;
            H = from_fp(gp);
            M = static_cast<unsigned long>(p);
            prev.clear();
            continue;
        }
        // CRT: H' = H + M * ((g - H) / M mod p)
        Integer P(static_cast<unsigned long>(p)), Minv, Mp = M % P;
        mpz_invert(Minv.get_mpz_t(), Mp.get_mpz_t(), P.get_mpz_t());
        H.resize(gp.size(), Integer(0));
        for (size_t i = 0; i < gp.size(); ++i) {
            Integer t = (Integer(static_cast<unsigned long>(gp[i])) - H[i]) * Minv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t());
            H[i] += M * t;
        }
        M *= P;
        ZPoly lifted = zsym(H, M);
        if (lifted == prev) {
            QPoly g = primitive_part(to_q(lifted));
            QPoly q;
            if (divides_exactly(g, pa, q) && divides_exactly(g, pb, q)) return monic(g);
        }
        prev = lifted;
    }
}

QFactorization factor(const QPoly& p) {
    if (p.zero()) fail(Errc::InvalidArgument, "factor(0)");
    QFactorization out{p.lc(), {}};
    if (p.degree() == 0) return out;
    auto parts = squarefree_decomposition(p);
    for (size_t k = 0; k < parts.size(); ++k) {
        QPoly s = parts[k];
        if (s.degree() <= 0) continue;
        // strip x factors
        if (sgn(s.coeff(0)) == 0) {
            out.factors.push_back({QPoly::x(), static_cast<unsigned>(k + 1)});
            s = exact_div(s, QPoly::x());
            if (s.degree() <= 0) continue;
        }
        for (auto& g : zassenhaus(primitive_part(s)))
            out.factors.push_back({monic(g), static_cast<unsigned>(k + 1)});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (poly_less(a.first, b.first)) return true;
        if (poly_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const QPoly& p) {
    if (p.degree() <= 0) return false;
    auto f = factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> r;
    if (p.zero()) return r;
    for (const auto& [g, m] : factor(p).factors)
        if (g.degree() == 1) r.push_back(Rational(-g.coeff(0)));
    std::sort(r.begin(), r.end());
    return r;
}

int sign_at(const QPoly& p, const Rational& x) { return sgn(p.eval(x)); }

namespace {

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> s{p, p.derivative()};
    while (!s.back().zero()) {
        QPoly r = -(s[s.size() - 2] % s.back());
        if (r.zero()) break;
        s.push_back(r);
    }
    return s;
}

int variations(const std::vector<QPoly>& s, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& q : s) {
        int sg = sign_at(q, x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

Rational cauchy_bound(const QPoly& p) {
    Rational m = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Rational c = abs(p.coeff(k) / p.lc());
        if (c > m) m = c;
    }
    return m + 1;
}

}  // namespace

int count_real_roots(const QPoly& p) {
    if (p.degree() <= 0) return 0;
    QPoly q = p;
    QPoly g = gcd(q, q.derivative());
    if (g.degree() > 0) q = exact_div(q, g);
    auto s = sturm_sequence(q);
    Rational B = cauchy_bound(q);
    return variations(s, Rational(-B)) - variations(s, B);
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p0, const Rational& width) {
    std::vector<RootInterval> out;
    if (p0.degree() <= 0) return out;
    QPoly p = p0;
    QPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) p = exact_div(p, g);
    auto s = sturm_sequence(p);
    Rational B = cauchy_bound(p);
    std::vector<RootInterval> stack{{Rational(-B), B}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        int n = variations(s, iv.lo) - variations(s, iv.hi);
        if (n == 0) continue;
        if (n == 1 && iv.hi - iv.lo <= width) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        stack.push_back({mid, iv.hi});
        stack.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace ect
