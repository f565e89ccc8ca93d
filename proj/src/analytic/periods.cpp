#include "ect/analytic/periods.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ect/analytic/roots.hpp"
#include "ect/errors.hpp"

namespace ect {

namespace {

BigFloat tol_digits(long d, mpfr_prec_t bits) { return pow10(-d, bits); }

BigComplex agm(BigComplex a, BigComplex b) {
    mpfr_prec_t bits = a.bits();
    BigFloat eps = pow2(-static_cast<long>(bits) + 4, bits), half(0.5, bits);
    for (int it = 0; it < 10000; ++it) {
        if (abs(a - b) <= eps * abs(a)) return a;
        BigComplex a1 = half * (a + b);
        BigComplex b1 = sqrt(a * b);
        if (abs(a1 - b1) > abs(a1 + b1)) b1 = -b1;
        a = std::move(a1);
        b = std::move(b1);
    }
    fail(Errc::PrecisionLoss, "AGM did not converge");
}

BigFloat sine_between(const BigComplex& u, const BigComplex& v) {
    BigComplex p = v * u.conj();
    return abs(p.im) / abs(p);
}

// Lattice-invariant scale of the curve: max |e_k|.
BigFloat e_scale(const std::array<BigComplex, 3>& e) {
    BigFloat s = abs(e[0]);
    for (int k = 1; k < 3; ++k) s = std::max(s, abs(e[k]));
    return s;
}

void reduce_basis(BigComplex& w1, BigComplex& w2) {
    mpfr_prec_t bits = w1.bits();
    BigFloat delta = pow2(-static_cast<long>(bits) / 2, bits), half(0.5, bits), one(1L, bits);
    if ((w2 / w1).im.sign() < 0) w2 = -w2;
    for (int it = 0; it < 1000; ++it) {
        BigComplex tau = w2 / w1;
        if (abs(tau.re) > half + delta) {
            BigFloat n = floor(tau.re + half);
            w2 -= BigComplex(n) * w1;
            continue;
        }
        if (tau.norm2() < one - delta) {
            BigComplex t = w1;
            w1 = w2;
            w2 = -t;
            continue;
        }
        break;
    }
    bool neg = abs(w1.re) > delta * abs(w1) ? w1.re.sign() < 0 : w1.im.sign() < 0;
    if (neg) {
        w1 = -w1;
        w2 = -w2;
    }
}

PeriodBasis compute_basis(const BigComplex& lambda_in, mpfr_prec_t bits, long digits) {
    BigComplex lambda = lambda_in.at(bits);
    BigFloat small = pow2(-static_cast<long>(bits) / 2, bits);
    BigComplex one(BigFloat(1L, bits));
    if (abs(lambda) < small || abs(one - lambda) < small) fail(Errc::DegenerateLambda, "lambda is 0 or 1");
    PeriodBasis B;
    B.lambda = lambda;
    B.digits = digits;
    BigComplex shift = (one + lambda) / BigComplex(BigFloat(3L, bits));
    B.e = {BigComplex(bits) - shift, one - shift, lambda - shift};

    std::array<BigComplex, 3> om;
    BigComplex pi(BigFloat::pi(bits));
    for (int k = 0; k < 3; ++k) {
        int l = (k + 1) % 3, m = (k + 2) % 3;
        BigComplex s1 = stable_sqrt(B.e[k] - B.e[l]), s2 = stable_sqrt(B.e[k] - B.e[m]);
        if (abs(s1 - s2) > abs(s1 + s2)) s2 = -s2;
        om[k] = pi / agm(s1, s2);
    }
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
    std::vector<BigFloat> sines;
    for (auto [i, j] : pairs) sines.push_back(sine_between(om[i], om[j]));
    std::vector<size_t> order{0, 1, 2};
    BigFloat tie(1e-8, bits);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return sines[x] > sines[y] + tie; });

    BigFloat accept = tol_digits(digits - 1, bits);
    for (size_t idx : order) {
        if (sines[idx] < small) continue;
        B.omega1 = om[pairs[idx].first];
        B.omega2 = om[pairs[idx].second];
        reduce_basis(B.omega1, B.omega2);
        if (reconstruction_error(B) < accept) return B;
    }
    fail(Errc::PrecisionLoss, "no candidate pair of periods reconstructs the curve");
}

struct WpPair {
    BigComplex p, dp;
};

BigComplex lambert_T(const BigComplex& v, const BigComplex& one) {
    BigComplex d = one - v;
    return v / (d * d);
}
BigComplex lambert_U(const BigComplex& v, const BigComplex& one) {
    BigComplex d = one - v;
    return v * (one + v) / (d * d * d);
}

long series_terms(const BigFloat& absq, mpfr_prec_t bits, double extra_power) {
    double lq = -std::log2(std::max(absq.to_double(), 1e-300));
    if (!(lq > 0)) fail(Errc::PrecisionLoss, "nome not inside the unit disk");
    long n = 1;
    while (n * lq - extra_power * std::log2(static_cast<double>(n + 1)) < static_cast<double>(bits) + 16) ++n;
    return n + 1;
}

WpPair wp_both(const BigComplex& z_in, const PeriodBasis& B) {
    mpfr_prec_t bits = B.bits();
    BigComplex z = reduce_mod_lattice(z_in.at(bits), B);
    BigComplex one(BigFloat(1L, bits));
    BigComplex twopii(BigFloat(bits), BigFloat(2L, bits) * BigFloat::pi(bits));
    BigComplex q = exp(twopii * B.tau());
    BigComplex w = exp(twopii * z / B.omega1);
    if (abs(one - w) < pow2(-static_cast<long>(bits) + 8, bits))
        fail(Errc::KernelElement, "argument lies on the lattice");
    BigComplex winv = one / w;
    long n_terms = series_terms(abs(q), bits, 3.0) + 1;
    BigComplex S = lambert_T(w, one), U = lambert_U(w, one);
    BigComplex qn = one;
    for (long n = 1; n <= n_terms; ++n) {
        qn *= q;
        BigComplex a = qn * w, b = qn * winv;
        S += lambert_T(a, one) + lambert_T(b, one) - BigComplex(BigFloat(2L, bits)) * lambert_T(qn, one);
        U += lambert_U(a, one) - lambert_U(b, one);
    }
    BigComplex c = twopii / B.omega1;
    BigComplex c2 = c * c;
    return {c2 * (S + BigComplex(BigFloat(Rational(1, 12), bits))), c2 * c * U};
}

BigComplex log_core(const ComplexPoint& P, const PeriodBasis& B) {
    mpfr_prec_t bits = B.bits();
    BigComplex one(BigFloat(1L, bits));
    BigComplex X = P.x.at(bits) - (one + B.lambda) / BigComplex(BigFloat(3L, bits));
    BigComplex two_y = BigComplex(BigFloat(2L, bits)) * P.y.at(bits);
    BigFloat tol = tol_digits(B.digits - 10, bits);
    BigFloat sx = std::max(BigFloat(1L, bits), abs(X)), sy = std::max(BigFloat(1L, bits), abs(two_y));
    BigComplex half(BigFloat(0.5, bits));
    std::vector<BigComplex> halves{half * B.omega1, half * B.omega2, half * (B.omega1 + B.omega2)};

    // Near a half period x determines z only to the square root of the
    // working precision; Newton on whichever of wp, wp' is better conditioned
    // restores full accuracy before the strict check.
    BigFloat coarse = pow10(-(B.digits / 3), bits);
    BigComplex g2 = curve_g2g3(B).first;
    BigComplex six(BigFloat(6L, bits)), half_c(BigFloat(0.5, bits));
    BigComplex found(bits);
    auto accept = [&](const BigComplex& z0) {
        try {
            BigComplex z = z0;
            WpPair v = wp_both(z, B);
            if (!(abs(v.p - X) / sx < coarse && abs(v.dp - two_y) / sy < coarse)) return false;
            for (int it = 0; it < 12; ++it) {
                BigComplex d2 = six * v.p * v.p - half_c * g2;
                BigComplex step = abs(v.dp) >= abs(d2) ? (v.p - X) / v.dp : (v.dp - two_y) / d2;
                z -= step;
                v = wp_both(z, B);
                if (abs(step) < pow2(-static_cast<long>(bits) + 8, bits) * (abs(z) + BigFloat(1L, bits))) break;
            }
            if (abs(v.p - X) / sx < tol && abs(v.dp - two_y) / sy < tol) {
                found = z;
                return true;
            }
            return false;
        } catch (const Error&) {
            return false;
        }
    };
    // R_F(kx,ky,kz) sqrt(k) integrates along a rotated ray; rotations move
    // arguments off the cut on the negative real axis.
    BigFloat r2 = sqrt(BigFloat(0.5, bits));
    std::vector<BigComplex> rot{one, BigComplex::i(bits), -BigComplex::i(bits), BigComplex(r2, r2), BigComplex(r2, -r2)};
    auto on_cut = [](const BigComplex& v) { return v.im.is_zero() && v.re.sign() < 0; };
    auto rf_at = [&](const BigComplex& x) {
        std::vector<BigComplex> out;
        for (const auto& k : rot) {
            std::array<BigComplex, 3> args{k * (x - B.e[0]), k * (x - B.e[1]), k * (x - B.e[2])};
            if (on_cut(args[0]) || on_cut(args[1]) || on_cut(args[2])) continue;
            try {
                out.push_back(sqrt(k) * carlson_rf(args[0], args[1], args[2]));
            } catch (const Error&) {
            }
        }
        return out;
    };

    for (const auto& r : rf_at(X)) {
        if (accept(r) || accept(-r)) return found;
    }
    for (int k = 0; k < 3; ++k) {
        BigComplex d = X - B.e[k];
        if (d.is_zero()) continue;
        int l = (k + 1) % 3, m = (k + 2) % 3;
        BigComplex xt = B.e[k] + (B.e[k] - B.e[l]) * (B.e[k] - B.e[m]) / d;
        for (const auto& rt : rf_at(xt)) {
            for (const auto& h : halves) {
                if (accept(rt - h) || accept(-rt - h)) return found;
            }
        }
    }
    fail(Errc::PrecisionLoss, "no elliptic logarithm candidate reproduces the point");
}

}  // namespace

PeriodBasis periods_legendre(const BigComplex& lambda, long digits) {
    if (digits < 12) fail(Errc::InvalidArgument, "precision below 12 digits");
    PeriodBasis main = compute_basis(lambda, digits_to_bits(digits, kGuardDigits), digits);
    PeriodBasis sh = compute_basis(lambda, digits_to_bits(digits, kShadowGuardDigits), digits);
    mpfr_prec_t bits = main.bits();
    BigFloat tol = tol_digits(digits, bits);
    // The shadow lattice must coincide with the main one.
    std::array<const BigComplex*, 2> sw{&sh.omega1, &sh.omega2};
    Integer m[2][2];
    for (int r = 0; r < 2; ++r) {
        auto [s, t] = lattice_coords(sw[r]->at(bits), main);
        m[r][0] = s.round_to_integer();
        m[r][1] = t.round_to_integer();
        BigFloat ds = abs(s - BigFloat(m[r][0], bits)), dt = abs(t - BigFloat(m[r][1], bits));
        if (ds > tol || dt > tol) fail(Errc::PrecisionLoss, "shadow evaluation of the periods disagrees");
    }
    Integer det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (abs(det) != 1) fail(Errc::PrecisionLoss, "shadow periods span a different lattice");
    main.shadow = std::make_shared<const PeriodBasis>(std::move(sh));
    return main;
}

PeriodBasis periods_legendre(const Rational& lambda, long digits) {
    if (lambda == 0 || lambda == 1) fail(Errc::DegenerateLambda, "lambda is 0 or 1");
    return periods_legendre(BigComplex::from_rational(lambda, digits_to_bits(digits, kGuardDigits + 5)), digits);
}

std::pair<BigComplex, BigComplex> eisenstein_g2g3(const BigComplex& omega1, const BigComplex& omega2) {
    mpfr_prec_t bits = omega1.bits();
    BigComplex tau = omega2 / omega1;
    if (tau.im.sign() <= 0) tau = -tau;
    BigComplex twopii(BigFloat(bits), BigFloat(2L, bits) * BigFloat::pi(bits));
    BigComplex q = exp(twopii * tau);
    // sigma_5(n) q^n <= n^6 |q|^n bounds every term and the geometric tail.
    long M = series_terms(abs(q), bits, 6.0);
    std::vector<Integer> s3(static_cast<size_t>(M) + 1), s5(static_cast<size_t>(M) + 1);
    for (long d = 1; d <= M; ++d) {
        Integer d3 = Integer(d) * d * d, d5 = d3 * d * d;
        for (long n = d; n <= M; n += d) {
            s3[static_cast<size_t>(n)] += d3;
            s5[static_cast<size_t>(n)] += d5;
        }
    }
    BigComplex one(BigFloat(1L, bits)), A(bits), Bs(bits), qn = one;
    for (long n = 1; n <= M; ++n) {
        qn *= q;
        A += BigFloat(s3[static_cast<size_t>(n)], bits) * qn;
        Bs += BigFloat(s5[static_cast<size_t>(n)], bits) * qn;
    }
    BigComplex E4 = one + BigFloat(240L, bits) * A, E6 = one - BigFloat(504L, bits) * Bs;
    BigComplex k = BigComplex(BigFloat(2L, bits) * BigFloat::pi(bits)) / omega1;
    BigComplex k2 = k * k, k4 = k2 * k2;
    BigComplex g2 = k4 * E4 / BigComplex(BigFloat(12L, bits));
    BigComplex g3 = k4 * k2 * E6 / BigComplex(BigFloat(216L, bits));
    return {g2, g3};
}

std::pair<BigComplex, BigComplex> curve_g2g3(const PeriodBasis& B) {
    mpfr_prec_t bits = B.e[0].bits();
    BigComplex four(BigFloat(4L, bits));
    BigComplex s2 = B.e[0] * B.e[1] + B.e[0] * B.e[2] + B.e[1] * B.e[2];
    return {-(four * s2), four * B.e[0] * B.e[1] * B.e[2]};
}

BigFloat reconstruction_error(const PeriodBasis& B) {
    auto [G2, G3] = eisenstein_g2g3(B.omega1, B.omega2);
    auto [g2, g3] = curve_g2g3(B);
    BigFloat s = e_scale(B.e);
    BigFloat s2 = s * s;
    return std::max(abs(G2 - g2) / s2, abs(G3 - g3) / (s2 * s));
}

BigComplex wp(const BigComplex& z, const PeriodBasis& basis) { return wp_both(z, basis).p; }
BigComplex wp_prime(const BigComplex& z, const PeriodBasis& basis) { return wp_both(z, basis).dp; }

BigComplex carlson_rf(const BigComplex& x_in, const BigComplex& y_in, const BigComplex& z_in) {
    mpfr_prec_t bits = std::max({x_in.bits(), y_in.bits(), z_in.bits()});
    BigComplex x = x_in.at(bits), y = y_in.at(bits), z = z_in.at(bits);
    int zeros = x.is_zero() + y.is_zero() + z.is_zero();
    if (zeros > 1) fail(Errc::DivisionByZero, "R_F with two vanishing arguments");
    BigComplex quarter(BigFloat(0.25, bits)), third(BigFloat(Rational(1, 3), bits));
    BigFloat stop = pow2(-static_cast<long>(bits) / 6 - 6, bits);
    for (int it = 0; it < 4000; ++it) {
        BigComplex A = third * (x + y + z);
        BigFloat dev = std::max({abs(A - x), abs(A - y), abs(A - z)});
        if (dev <= stop * abs(A)) {
            BigComplex X = (A - x) / A, Y = (A - y) / A;
            BigComplex Z = -(X + Y);
            BigComplex E2 = X * Y - Z * Z, E3 = X * Y * Z;
            BigComplex one(BigFloat(1L, bits));
            auto c = [&](long p, long q) { return BigComplex(BigFloat(Rational(p, q), bits)); };
            BigComplex poly = one - c(1, 10) * E2 + c(1, 14) * E3 + c(1, 24) * E2 * E2 - c(3, 44) * E2 * E3;
            return poly / sqrt(A);
        }
        BigComplex sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
        BigComplex lam = sx * sy + sy * sz + sz * sx;
        x = quarter * (x + lam);
        y = quarter * (y + lam);
        z = quarter * (z + lam);
    }
    fail(Errc::PrecisionLoss, "R_F duplication did not converge");
}

std::pair<BigFloat, BigFloat> lattice_coords(const BigComplex& z_in, const PeriodBasis& B) {
    mpfr_prec_t bits = B.bits();
    BigComplex z = z_in.at(bits);
    const BigComplex &w1 = B.omega1, &w2 = B.omega2;
    BigFloat det = w1.re * w2.im - w1.im * w2.re;
    return {(z.re * w2.im - z.im * w2.re) / det, (w1.re * z.im - w1.im * z.re) / det};
}

BigComplex reduce_mod_lattice(const BigComplex& z, const PeriodBasis& B) {
    auto [s, t] = lattice_coords(z, B);
    mpfr_prec_t bits = B.bits();
    BigFloat half(0.5, bits);
    BigFloat ms = floor(s + half), mt = floor(t + half);
    return z.at(bits) - BigComplex(ms) * B.omega1 - BigComplex(mt) * B.omega2;
}

BigFloat lattice_distance(const BigComplex& z, const PeriodBasis& B) {
    auto [s, t] = lattice_coords(z, B);
    BigFloat half(0.5, B.bits());
    return std::max(abs(s - floor(s + half)), abs(t - floor(t + half)));
}

BigComplex elliptic_log(const ComplexPoint& P, const PeriodBasis& basis) {
    if (P.infinity) fail(Errc::IdentityPoint, "elliptic log of the point at infinity");
    BigComplex z = log_core(P, basis);
    if (basis.shadow) {
        const PeriodBasis& sh = *basis.shadow;
        ComplexPoint Ps{false, P.x.at(sh.bits()), P.y.at(sh.bits())};
        BigComplex zs = log_core(Ps, sh);
        if (lattice_distance(z - zs.at(basis.bits()), basis) > tol_digits(basis.digits, basis.bits()))
            fail(Errc::PrecisionLoss, "shadow elliptic logarithm disagrees");
    }
    return z;
}

ComplexPoint legendre_point(const Rational& x, const Rational& y, mpfr_prec_t bits) {
    return {false, BigComplex::from_rational(x, bits), BigComplex::from_rational(y, bits)};
}

ThetaCoords theta_coords(const std::array<ComplexPoint, 3>& triple, const PeriodBasis& basis) {
    if (triple[0].infinity && triple[1].infinity && triple[2].infinity)
        fail(Errc::IdentityPoint, "all three points are the identity");
    mpfr_prec_t bits = basis.bits();
    ThetaCoords out{{BigFloat(bits), BigFloat(bits), BigFloat(bits), BigFloat(bits), BigFloat(bits), BigFloat(bits)},
                    basis.digits};
    for (int i = 0; i < 3; ++i) {
        if (triple[i].infinity) continue;
        auto [s, t] = lattice_coords(elliptic_log(triple[i], basis), basis);
        out.xi[2 * i] = s - floor(s);
        out.xi[2 * i + 1] = t - floor(t);
    }
    return out;
}

ComplexPoint LegendreEmbedding::map(const BigComplex& x, const BigComplex& y) const {
    mpfr_prec_t bits = s.bits();
    BigComplex s2 = s * s;
    return {false, (x.at(bits) - e1) / s2, y.at(bits) / (s2 * s)};
}

LegendreEmbedding legendre_embedding(const BigComplex& a, const BigComplex& b) {
    mpfr_prec_t bits = std::max(a.bits(), b.bits());
    std::vector<BigComplex> c{b.at(bits), a.at(bits), BigComplex(bits), BigComplex(BigFloat(1L, bits))};
    std::vector<BigComplex> r = complex_roots(c, bits);
    for (auto& v : r) v = snap_real(v);
    BigComplex d = r[1] - r[0];
    if (abs(d) < pow2(-static_cast<long>(bits) / 2, bits) * (abs(r[0]) + abs(r[1]) + BigFloat(1L, bits)))
        fail(Errc::SingularCurve, "cubic has a repeated root");
    LegendreEmbedding L{a.at(bits), b.at(bits), r[0], stable_sqrt(d), snap_real((r[2] - r[0]) / d)};
    return L;
}

WeierstrassTheta weierstrass_theta(const BigComplex& a, const BigComplex& b, const std::array<BigComplex, 3>& xs,
                                   long digits) {
    mpfr_prec_t bits = digits_to_bits(digits, kGuardDigits);
    LegendreEmbedding L = legendre_embedding(a.at(bits), b.at(bits));
    PeriodBasis basis = periods_legendre(L.lambda, digits);
    std::array<ComplexPoint, 3> pts;
    for (int i = 0; i < 3; ++i) {
        BigComplex x = xs[i].at(bits);
        BigComplex y = stable_sqrt(x * x * x + L.a * x + L.b);
        pts[i] = L.map(x, y);
    }
    ThetaCoords th = theta_coords(pts, basis);
    return {L, std::move(basis), std::move(th)};
}

}  // namespace ect
