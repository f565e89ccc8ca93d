#include "ect/analytic/relations.hpp"

#include <algorithm>
#include <cmath>

#include "ect/errors.hpp"

namespace ect {

Integer RationalHit::residue() const {
    Integer r = p % N;
    if (r < 0) r += N;
    return r;
}

std::optional<RationalHit> rationality_detect(const BigFloat& xi, const Integer& N, const BigFloat& tol) {
    if (N <= 0) fail(Errc::InvalidArgument, "denominator must be positive");
    mpfr_prec_t bits = std::max(xi.bits(), tol.bits());
    BigFloat Nf(N, bits);
    BigFloat limit = BigFloat(1L, bits) / (BigFloat(2L, bits) * Nf);
    if (tol >= limit) fail(Errc::AmbiguousTolerance, "tolerance must be below 1/(2N)");
    BigFloat scaled = xi.at(bits) * Nf;
    Integer p = floor(scaled + BigFloat(0.5, bits)).round_to_integer();
    BigFloat dist = abs(xi.at(bits) - BigFloat(p, bits) / Nf);
    if (dist < tol) return RationalHit{p, N};
    return std::nullopt;
}

std::optional<RationalHit> rationality_detect(double xi, long N, double tol) {
    // Decimal round trip keeps inputs such as 0.40000001 exactly as written.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", xi);
    BigFloat x(std::string(buf), 128);
    std::snprintf(buf, sizeof buf, "%.17g", tol);
    return rationality_detect(x, Integer(N), BigFloat(std::string(buf), 128));
}

Integer rational_height(const Rational& r) {
    Integer p = abs(r.get_num()), q = r.get_den();
    return p > q ? p : q;
}

long counting_function(const std::vector<std::vector<Rational>>& points, const Integer& T) {
    if (T < 1) fail(Errc::InvalidArgument, "T must be at least 1");
    long n = 0;
    for (const auto& pt : points) {
        Integer h = 1;
        for (const auto& c : pt) h = std::max(h, rational_height(c));
        if (h <= T) ++n;
    }
    return n;
}

namespace {

Integer sup_norm(const std::array<Integer, 3>& v) {
    Integer m = 0;
    for (const auto& x : v) m = std::max(m, Integer(abs(x)));
    return m;
}

bool better(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
    Integer na = sup_norm(a), nb = sup_norm(b);
    if (na != nb) return na < nb;
    return a < b;
}

bool in_kernel(const Integer& N, const Integer& R, const TorsionCoords& c, const std::array<Integer, 3>& v) {
    Integer s0 = c[0][0] * v[0] + c[0][1] * v[1] + c[0][2] * v[2];
    Integer s1 = c[1][0] * v[0] + c[1][1] * v[1] + c[1][2] * v[2];
    return s0 % N == 0 && s1 % R == 0;
}

std::array<Integer, 5> extend(const Integer& N, const Integer& R, const TorsionCoords& c, const std::array<Integer, 3>& v) {
    Integer s0 = c[0][0] * v[0] + c[0][1] * v[1] + c[0][2] * v[2];
    Integer s1 = c[1][0] * v[0] + c[1][1] * v[1] + c[1][2] * v[2];
    return {v[0], v[1], v[2], Integer(-s0 / N), Integer(-s1 / R)};
}

// Best nonzero kernel vector with all |entries| <= r, or nullopt.
std::optional<std::array<Integer, 3>> box_search(const Integer& N, const Integer& R, const TorsionCoords& c, long r) {
    std::optional<std::array<Integer, 3>> best;
    // Reduce coordinates once; the congruences only see residues.
    long a[2][3];
    long mod[2] = {N.get_si(), R.get_si()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            Integer t = c[i][j] % (i == 0 ? N : R);
            a[i][j] = t.get_si();
        }
    for (long x = 0; x <= r; ++x) {
        for (long y = (x == 0 ? 0 : -r); y <= r; ++y) {
            for (long z = (x == 0 && y == 0 ? 1 : -r); z <= r; ++z) {
                long s0 = (a[0][0] * x + a[0][1] * y + a[0][2] * z) % mod[0];
                if (s0 != 0) continue;
                long s1 = (a[1][0] * x + a[1][1] * y + a[1][2] * z) % mod[1];
                if (s1 != 0) continue;
                std::array<Integer, 3> v{Integer(x), Integer(y), Integer(z)};
                if (!best || better(v, *best)) best = v;
            }
        }
    }
    return best;
}

long icbrt_floor(const Integer& n) {
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
    return r.get_si();
}

}  // namespace

std::array<Integer, 3> normalize_sign(std::array<Integer, 3> chi) {
    for (const auto& x : chi) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : chi) y = -y;
        break;
    }
    return chi;
}

std::vector<std::vector<Integer>> lll_reduce(std::vector<std::vector<Integer>> b) {
    size_t n = b.size();
    if (n == 0) return b;
    size_t dim = b[0].size();
    auto dot = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        Rational s = 0;
        for (size_t i = 0; i < dim; ++i) s += u[i] * v[i];
        return s;
    };
    std::vector<std::vector<Rational>> bs(n, std::vector<Rational>(dim));
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    std::vector<Rational> B(n);
    auto gram_schmidt = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < dim; ++k) bs[i][k] = b[i][k];
            for (size_t j = 0; j < i; ++j) {
                std::vector<Rational> bi(dim);
                for (size_t k = 0; k < dim; ++k) bi[k] = b[i][k];
                mu[i][j] = dot(bi, bs[j]) / B[j];
                for (size_t k = 0; k < dim; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
            }
            B[i] = dot(bs[i], bs[i]);
            if (B[i] == 0) fail(Errc::InvalidArgument, "LLL input rows are dependent");
        }
    };
    gram_schmidt();
    size_t k = 1;
    const Rational delta(3, 4);
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            Rational m = mu[k][j];
            Integer r;
            {
                Rational t = m + Rational(1, 2);
                mpz_fdiv_q(r.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
            }
            if (r != 0) {
                for (size_t c = 0; c < dim; ++c) b[k][c] -= r * b[j][c];
                gram_schmidt();
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<size_t>(k - 1, 1);
        }
    }
    return b;
}

bool annihilates(const Integer& N, const Integer& R, const TorsionCoords& c, const std::array<Integer, 5>& v) {
    Integer r0 = c[0][0] * v[0] + c[0][1] * v[1] + c[0][2] * v[2] + N * v[3];
    Integer r1 = c[1][0] * v[0] + c[1][1] * v[1] + c[1][2] * v[2] + R * v[4];
    return r0 == 0 && r1 == 0;
}

Integer exhaustive_min_norm(const Integer& N, const Integer& R, const TorsionCoords& coords) {
    auto v = box_search(N, R, coords, icbrt_floor(N * R));
    if (!v) fail(Errc::InvalidArgument, "no relation inside the Minkowski box");
    return sup_norm(*v);
}

RelationVector siegel_relation(const Integer& N, const Integer& R, const TorsionCoords& coords) {
    if (N <= 0 || R <= 0 || N % R != 0) fail(Errc::InvalidArgument, "need positive N, R with R | N");
    // Kernel of [c0 N 0; c1 0 R] through the embedding (v, K*(c0.v), K*(c1.v)).
    Integer K = N * R * 16 + 16;
    std::vector<std::vector<Integer>> rows;
    for (int j = 0; j < 3; ++j) {
        std::vector<Integer> r(5, 0);
        r[static_cast<size_t>(j)] = 1;
        r[3] = K * coords[0][static_cast<size_t>(j)];
        r[4] = K * coords[1][static_cast<size_t>(j)];
        rows.push_back(r);
    }
    rows.push_back({0, 0, 0, K * N, 0});
    rows.push_back({0, 0, 0, 0, K * R});
    rows = lll_reduce(rows);
    std::optional<std::array<Integer, 3>> best;
    for (const auto& r : rows) {
        if (r[3] != 0 || r[4] != 0) continue;
        std::array<Integer, 3> v = normalize_sign({r[0], r[1], r[2]});
        if (sup_norm(v) == 0) continue;
        if (!best || better(v, *best)) best = v;
    }
    // Minkowski: a nonzero vector of sup norm <= floor(cbrt(NR)) always exists.
    long mink = icbrt_floor(N * R);
    RelationVector out;
    Integer NR = N * R;
    if (NR <= 1000000) {
        long r = mink;
        if (best && sup_norm(*best) < r) r = sup_norm(*best).get_si();
        auto found = box_search(N, R, coords, r);
        if (found && (!best || better(*found, *best))) best = found;
        out.proven_minimal = true;
    }
    if (!best) fail(Errc::InvalidArgument, "lattice reduction produced no kernel vector");
    out.chi = *best;
    out.norm = sup_norm(out.chi);
    out.extended = extend(N, R, coords, out.chi);
    if (!in_kernel(N, R, coords, out.chi) || !annihilates(N, R, coords, out.extended))
        fail(Errc::InvalidArgument, "relation failed exact verification");
    return out;
}

namespace {

struct CoordTable {
    std::array<BigFloat, 6> c;  // lattice coordinates of z1, z2, z3
    std::array<double, 6> d;
};

CoordTable coords_of(const LogTriple& t) {
    CoordTable out;
    for (int i = 0; i < 3; ++i) {
        auto [s, u] = lattice_coords(t.logs[i], t.basis);
        out.c[2 * i] = s;
        out.c[2 * i + 1] = u;
        out.d[2 * i] = s.to_double();
        out.d[2 * i + 1] = u.to_double();
    }
    return out;
}

BigFloat residual(const CoordTable& t, const std::array<long, 3>& v, mpfr_prec_t bits) {
    BigFloat worst(bits), half(0.5, bits);
    for (int k = 0; k < 2; ++k) {
        BigFloat s(bits);
        for (int i = 0; i < 3; ++i) s += BigFloat(v[static_cast<size_t>(i)], bits) * t.c[2 * i + k];
        worst = std::max(worst, abs(s - floor(s + half)));
    }
    return worst;
}

}  // namespace

std::optional<RelationVector> integer_relation_detect(const LogTriple& primary, const LogTriple& verification,
                                                      long bound) {
    if (bound < 1) fail(Errc::InvalidArgument, "bound must be positive");
    if (verification.basis.digits <= primary.basis.digits)
        fail(Errc::InvalidArgument, "verification must run at higher precision");
    CoordTable P = coords_of(primary), V = coords_of(verification);
    mpfr_prec_t pb = primary.basis.bits(), vb = verification.basis.bits();
    BigFloat tol_p = pow10(10 - primary.basis.digits, pb), tol_v = pow10(10 - verification.basis.digits, vb);
    double coarse = 1e-9 * static_cast<double>(bound) * 3;
    std::optional<std::array<long, 3>> best;
    auto norm = [](const std::array<long, 3>& v) { return std::max({std::labs(v[0]), std::labs(v[1]), std::labs(v[2])}); };
    for (long a = 0; a <= bound; ++a) {
        for (long b = (a == 0 ? 0 : -bound); b <= bound; ++b) {
            for (long c = (a == 0 && b == 0 ? 1 : -bound); c <= bound; ++c) {
                std::array<long, 3> v{a, b, c};
                bool near = true;
                for (int k = 0; k < 2 && near; ++k) {
                    double s = a * P.d[k] + b * P.d[2 + k] + c * P.d[4 + k];
                    if (std::fabs(s - std::nearbyint(s)) > coarse) near = false;
                }
                if (!near) continue;
                if (best && (norm(v) > norm(*best) || (norm(v) == norm(*best) && v > *best))) continue;
                if (residual(P, v, pb) > tol_p) continue;
                if (residual(V, v, vb) > tol_v) continue;
                best = v;
            }
        }
    }
    if (!best) return std::nullopt;
    RelationVector r;
    r.chi = {Integer((*best)[0]), Integer((*best)[1]), Integer((*best)[2])};
    r.norm = norm(*best);
    r.extended = {r.chi[0], r.chi[1], r.chi[2], 0, 0};
    r.proven_minimal = true;
    return r;
}

}  // namespace ect
