#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ect/ec/divpoly.hpp"

namespace ect {

template <class F>
struct TorsionCertificate {
    int order = 0;
    // (m, x-only psi_m(x0)) for each maximal proper divisor m of order.
    std::vector<std::pair<int, F>> witness;
    // x-only psi_order(x0); zero by construction.
    F vanishing;
};

std::vector<int> maximal_proper_divisors(int n);

// Smallest N <= nmax killing a point with x-coordinate x0, certified by the
// division polynomials.  Never looks at y, so both square roots of
// x0^3 + a x0 + b give the same answer.
template <class F>
std::optional<TorsionCertificate<F>> torsion_order_x(const F& x0, const WeierstrassCurve<F>& E, int nmax = 12) {
    if (nmax < 1) fail(Errc::InvalidArgument, "nmax must be positive");
    auto f = division_values<F>(std::max(nmax, 2), x0, E.a, E.b);
    F cubic = E.rhs(x0);
    for (int n = 2; n <= nmax; ++n) {
        F v = x_only_division<F>(n, f, cubic);
        if (!is_zero(v)) continue;
        TorsionCertificate<F> c;
        c.order = n;
        c.vanishing = v;
        for (int m : maximal_proper_divisors(n)) c.witness.push_back({m, x_only_division<F>(m, f, cubic)});
        return c;
    }
    return std::nullopt;
}

// Independent recomputation from scratch.
template <class F>
bool verify_certificate(const TorsionCertificate<F>& c, const F& x0, const WeierstrassCurve<F>& E) {
    if (c.order < 2) return false;
    auto f = division_values<F>(c.order, x0, E.a, E.b);
    F cubic = E.rhs(x0);
    if (!is_zero(x_only_division<F>(c.order, f, cubic))) return false;
    auto divs = maximal_proper_divisors(c.order);
    if (divs.size() != c.witness.size()) return false;
    for (size_t i = 0; i < divs.size(); ++i) {
        if (c.witness[i].first != divs[i]) return false;
        F v = x_only_division<F>(divs[i], f, cubic);
        if (is_zero(v) || !(v == c.witness[i].second)) return false;
    }
    return true;
}

}  // namespace ect
