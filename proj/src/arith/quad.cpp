#include "ect/arith/quad.hpp"

#include <sstream>

namespace ect {

std::pair<RatFunc, FFRadicand> RadicandTraits<RatFunc>::split(const RatFunc& x) {
    if (is_zero(x)) fail(Errc::InvalidArgument, "square class of zero");
    QPoly P = x.num() * x.den();
    Rational c = P.lc();
    QPoly m = P.scaled(Rational(1 / c));
    auto cs = square_split(c);
    QPoly odd(Rational(1)), root(Rational(1));
    auto parts = squarefree_decomposition(m);
    for (size_t k = 0; k < parts.size(); ++k) {
        size_t e = k + 1;
        if (e % 2) odd = odd * parts[k];
        for (size_t i = 0; i < e / 2; ++i) root = root * parts[k];
    }
    RatFunc r = RatFunc(root.scaled(cs.root), x.den());
    return {r, FFRadicand{cs.kernel, odd}};
}

std::string RadicandTraits<RatFunc>::str(const FFRadicand& r) {
    if (r.m.degree() == 0) return r.s.get_str();
    std::string p = to_string(r.m, "t");
    if (r.s == 1) return p;
    return r.s.get_str() + "*(" + p + ")";
}

namespace {

template <class Base, class CoeffStr>
std::string render(const QuadExt<Base>& x, CoeffStr cs) {
    using T = RadicandTraits<Base>;
    if (is_zero(x)) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, c] : x.terms()) {
        std::string coef = cs(c);
        bool neg = !coef.empty() && coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos;
        if (neg) coef.erase(0, 1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (T::is_one(r)) {
            os << coef;
            continue;
        }
        if (coef != "1") os << (coef.find_first_of("+- ") != std::string::npos ? "(" + coef + ")" : coef) << "*";
        os << "sqrt(" << T::str(r) << ")";
    }
    return os.str();
}

}  // namespace

std::string to_string(const QuadElem& x) {
    return render(x, [](const Rational& c) { return to_string(c); });
}

std::string to_string(const FFQuad& x, const std::string& var) {
    return render(x, [&](const RatFunc& c) { return to_string(c, var); });
}

std::vector<Integer> canonical_tower(const std::vector<Integer>& rads) {
    TowerGroup<Rational> g(rads);
    std::vector<Integer> nontrivial;
    for (const auto& [e, m] : g.elems)
        if (e != 1) nontrivial.push_back(e);
    std::sort(nontrivial.begin(), nontrivial.end(), RadicandTraits<Rational>::less);
    if (nontrivial.size() > 2) nontrivial.resize(2);
    return nontrivial;
}

TowerCoords tower_coords(const QuadElem& x, const std::vector<Integer>& tower) {
    using T = RadicandTraits<Rational>;
    TowerCoords out{tower, {}};
    std::vector<std::pair<Integer, Rational>> basis{{1, 1}};
    if (tower.size() >= 1) basis.push_back({tower[0], 1});
    if (tower.size() == 2) {
        basis.push_back({tower[1], 1});
        auto [c, k] = T::mul(tower[0], tower[1]);
        basis.push_back({k, c});
    }
    size_t used = 0;
    for (const auto& [k, c] : basis) {
        Rational v = x.coeff(k);
        if (sgn(v) != 0) ++used;
        out.coords.push_back(v / c);
    }
    if (used != x.terms().size()) fail(Errc::InvalidArgument, "element does not lie in the given tower");
    return out;
}

QuadElem from_tower_coords(const std::vector<Integer>& tower, const std::vector<Rational>& coords) {
    using T = RadicandTraits<Rational>;
    if (tower.size() > 2) fail(Errc::TowerDepthExceeded, "tower of depth > 2");
    if (coords.size() != (size_t(1) << tower.size()))
        fail(Errc::InvalidArgument, "coordinate count must be 2^depth");
    for (const auto& d : tower) {
        if (d == 0 || d == 1 || square_split(d).kernel != d)
            fail(Errc::InvalidArgument, "tower entries must be square-free and not 0 or 1");
    }
    if (tower.size() == 2 && tower[0] == tower[1]) fail(Errc::InvalidArgument, "tower entries must be distinct");
    QuadElem x(coords[0]);
    if (tower.size() >= 1) x += QuadElem::from_terms({{tower[0], coords[1]}});
    if (tower.size() == 2) {
        x += QuadElem::from_terms({{tower[1], coords[2]}});
        auto [c, k] = T::mul(tower[0], tower[1]);
        x += QuadElem::from_terms({{k, Rational(coords[3] * c)}});
    }
    return x;
}

bool is_totally_real(const QuadElem& x) {
    for (const auto& r : x.support())
        if (sgn(r) < 0) return false;
    TowerGroup<Rational> g(x.support());
    for (const auto& [e, m] : g.elems)
        if (sgn(e) < 0) return false;
    return true;
}

bool is_root_of_unity(const QuadElem& x) {
    if (is_zero(x)) return false;
    const QuadElem one(Rational(1));
    for (long n : {1, 2, 3, 4, 5, 6, 8, 10, 12})
        if (pow(x, n) == one) return true;
    return false;
}

}  // namespace ect
