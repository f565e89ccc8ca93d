#include "ect/tate/units.hpp"

#include "ect/tate/tate.hpp"

namespace ect {

std::vector<Integer> divisor_sums(int k, long K) {
    std::vector<Integer> s(static_cast<size_t>(std::max<long>(K, 0)));
    for (long d = 1; d < K; ++d) {
        Integer dk = pow(Integer(d), static_cast<unsigned long>(k));
        for (long m = d; m < K; m += d) s[m] += dk;
    }
    return s;
}

std::vector<Integer> a4_coefficients(long K) {
    auto s3 = divisor_sums(3, K);
    for (auto& c : s3) c *= -5;
    return s3;
}

std::vector<Integer> a6_coefficients(long K) {
    auto s3 = divisor_sums(3, K), s5 = divisor_sums(5, K);
    std::vector<Integer> out(s3.size());
    for (size_t m = 0; m < out.size(); ++m) {
        Integer n = 5 * s3[m] + 7 * s5[m];
        if (!mpz_divisible_ui_p(n.get_mpz_t(), 12)) fail(Errc::InvalidArgument, "a6 coefficient not integral");
        out[m] = -n / 12;
    }
    return out;
}

QuadElem reduction_x(const QuadElem& u) {
    QuadElem d = QuadElem(Rational(1)) - u;
    return u * (d * d).inverse();
}

std::array<QuadElem, 2> unit_from_reduction(int i, int j) {
    if (i == j) fail(Errc::InvalidArgument, "i and j must differ");
    if (i == 0) fail(Errc::InvalidArgument, "i must be nonzero");
    Rational B = make_rational(5 * i + j, i - j);
    QuadElem s = quad_sqrt(QuadElem(Rational(B * B - 1)));
    std::array<QuadElem, 2> r{QuadElem(Rational(-B)) + s, QuadElem(Rational(-B)) - s};
    QuadElem target(make_rational(j - i, 12 * i));
    for (const auto& u : r) {
        QuadElem quad = u * u + QuadElem(Rational(2 * B)) * u + QuadElem(Rational(1));
        if (!is_zero(quad) || !(reduction_x(u) == target))
            fail(Errc::InvalidArgument, "unit failed its defining equation");
    }
    return r;
}

UnitPair unit_pair(int i, int j, int k) {
    if (j > k) std::swap(j, k);
    return {{i, j, k}, unit_from_reduction(i, j), unit_from_reduction(i, k)};
}

IndependenceResult mult_independence(const QuadElem& u, const QuadElem& u_prime, long bound) {
    if (is_zero(u) || is_zero(u_prime)) fail(Errc::InvalidArgument, "units must be nonzero");
    if (bound < 1) fail(Errc::InvalidArgument, "bound must be positive");
    std::vector<Integer> rads = u.support();
    for (const auto& r : u_prime.support()) rads.push_back(r);
    TowerGroup<Rational> group(rads);  // throws TowerDepthExceeded past depth 2

    IndependenceResult res;
    res.u_totally_real = is_totally_real(u);
    res.u_prime_totally_real = is_totally_real(u_prime);
    QuadElem one(Rational(1));
    res.roots_of_unity_excluded = res.u_totally_real && res.u_prime_totally_real && !(u == one) &&
                                  !(u == -one) && !(u_prime == one) && !(u_prime == -one);

    std::vector<QuadElem> pos(bound + 1), neg(bound + 1);
    pos[0] = neg[0] = one;
    QuadElem inv = u_prime.inverse();
    for (long n = 1; n <= bound; ++n) {
        pos[n] = pos[n - 1] * u_prime;
        neg[n] = neg[n - 1] * inv;
    }
    QuadElem um = one;
    for (long m = 1; m <= bound; ++m) {
        um = um * u;
        for (long n = 1; n <= bound; ++n)
            for (int side = 0; side < 2; ++side) {
                const QuadElem& v = side ? neg[n] : pos[n];
                int sign = um == v ? 1 : (um == -v ? -1 : 0);
                if (!sign) continue;
                res.independent = false;
                res.M = m;
                res.N = side ? -n : n;
                res.sign = sign;
                return res;
            }
    }
    return res;
}

bool e0_membership(const CurvePoint<RatFunc>& P, const LongWeierstrass<RatFunc>& E, const Place& v) {
    for (const RatFunc* c : {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6})
        if (valuation(*c, v) < 0) fail(Errc::NotIntegralModel, "model is not integral at " + v.str());
    if (!on_curve(P, E)) fail(Errc::PointNotOnCurve, "point does not satisfy the curve equation");
    if (P.infinity || valuation(P.x, v) < 0) return true;
    if (valuation(P.y, v) < 0) fail(Errc::NotIntegralModel, "y has a pole where x does not");
    AlgNum x = reduce_at(P.x, v), y = reduce_at(P.y, v);
    AlgNum a1 = reduce_at(E.a1, v), a2 = reduce_at(E.a2, v), a3 = reduce_at(E.a3, v), a4 = reduce_at(E.a4, v);
    AlgNum fy = AlgNum(Rational(2)) * y + a1 * x + a3;
    AlgNum fx = a1 * y - AlgNum(Rational(3)) * x * x - AlgNum(Rational(2)) * a2 * x - a4;
    return !(is_zero(fy) && is_zero(fx));
}

}  // namespace ect
