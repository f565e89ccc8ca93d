#include "ect/analytic/roots.hpp"

#include <algorithm>
#include <cmath>

#include "ect/errors.hpp"

namespace ect {

namespace {

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
    BigComplex r = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) r = r * z + c[i];
    return r;
}

bool root_less(const BigComplex& a, const BigComplex& b) {
    BigFloat scale = abs(a) + abs(b) + BigFloat(1L, a.bits());
    BigFloat tol = scale * pow2(-static_cast<long>(a.bits()) / 2, a.bits());
    if (abs(a.re - b.re) > tol) return a.re < b.re;
    return a.im < b.im;
}

}  // namespace

std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& coeffs, mpfr_prec_t bits) {
    std::vector<BigComplex> c;
    for (const auto& x : coeffs) c.push_back(x.at(bits));
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.size() < 2) return {};
    size_t n = c.size() - 1;
    std::vector<BigComplex> dc;
    for (size_t i = 1; i < c.size(); ++i) dc.push_back(BigComplex(BigFloat(static_cast<long>(i), bits)) * c[i]);

    // Cauchy radius bound for the initial circle.
    BigFloat lead = abs(c.back()), rad(1L, bits);
    for (size_t i = 0; i < n; ++i) {
        BigFloat r = abs(c[i]) / lead + BigFloat(1L, bits);
        if (r > rad) rad = r;
    }
    std::vector<BigComplex> z;
    BigFloat pi = BigFloat::pi(bits);
    for (size_t k = 0; k < n; ++k) {
        BigFloat ang = (BigFloat(2L, bits) * pi * BigFloat(static_cast<long>(k), bits) + BigFloat(0.4, bits)) /
                       BigFloat(static_cast<long>(n), bits);
        BigFloat r = rad * BigFloat(0.5 + 0.37 * static_cast<double>(k % 3) / 3.0, bits);
        z.push_back({r * cos(ang), r * sin(ang)});
    }
    BigFloat eps = pow2(-static_cast<long>(bits) + 8, bits);
    BigComplex one(BigFloat(1L, bits));
    int settled = 0;
    for (int it = 0; it < 4000 && settled < 2; ++it) {
        bool small = true;
        for (size_t k = 0; k < n; ++k) {
            BigComplex pz = horner(c, z[k]);
            if (pz.is_zero()) continue;
            BigComplex ratio = pz / horner(dc, z[k]);
            BigComplex s(bits);
            for (size_t j = 0; j < n; ++j)
                if (j != k) s += one / (z[k] - z[j]);
            BigComplex step = ratio / (one - ratio * s);
            z[k] -= step;
            if (abs(step) > eps * (abs(z[k]) + BigFloat(1L, bits))) small = false;
        }
        settled = small ? settled + 1 : 0;
    }
    if (settled < 2) fail(Errc::PrecisionLoss, "root iteration did not converge");
    std::sort(z.begin(), z.end(), root_less);
    return z;
}

std::vector<BigComplex> complex_roots(const QPoly& p, mpfr_prec_t bits) {
    std::vector<BigComplex> c;
    for (const auto& x : p.coeffs()) c.push_back(BigComplex::from_rational(x, bits));
    return complex_roots(c, bits);
}

BigComplex snap_real(const BigComplex& z) {
    mpfr_prec_t b = z.bits();
    if (abs(z.im) <= abs(z) * pow2(-static_cast<long>(b) / 2, b)) return BigComplex(z.re);
    return z;
}

BigComplex stable_sqrt(const BigComplex& z) { return sqrt(snap_real(z)); }

BigComplex evaluate(const QPoly& p, const BigComplex& z) {
    BigComplex r(z.bits());
    for (size_t i = p.size(); i-- > 0;) r = r * z + BigComplex::from_rational(p[i], z.bits());
    return r;
}

std::vector<BigComplex> embeddings(const QuadElem& x, mpfr_prec_t bits) {
    std::vector<Integer> rads;
    for (const auto& r : x.support())
        if (r != 1) rads.push_back(r);
    std::vector<Integer> tower = canonical_tower(rads);
    TowerCoords tc = tower_coords(x, tower);
    std::vector<BigComplex> roots;
    for (const auto& d : tower) roots.push_back(sqrt(BigComplex(BigFloat(d, bits))));
    std::vector<BigComplex> out;
    size_t d = tower.size();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        BigComplex v(bits);
        for (size_t j = 0; j < tc.coords.size(); ++j) {
            BigComplex term = BigComplex::from_rational(tc.coords[j], bits);
            for (size_t g = 0; g < d; ++g) {
                if (!(j >> g & 1)) continue;
                term *= (mask >> g & 1) ? -roots[g] : roots[g];
            }
            v += term;
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace ect
