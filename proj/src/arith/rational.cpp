#include "ect/arith/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ect/errors.hpp"

namespace ect {

Rational make_rational(const Integer& p, const Integer& q) {
    if (q == 0) fail(Errc::DivisionByZero, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) fail(Errc::InvalidArgument, "empty rational");
    auto valid_int = [](const std::string& w) {
        size_t i = (!w.empty() && (w[0] == '-' || w[0] == '+')) ? 1 : 0;
        if (i >= w.size()) return false;
        for (; i < w.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(w[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string w) {
        if (!w.empty() && w[0] == '+') w.erase(0, 1);
        return w;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        fail(Errc::InvalidArgument, "malformed rational '" + std::string(s) + "'");
    return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

Integer naive_height(const Rational& x) {
    Integer p = abs(x.get_num());
    const Integer& q = x.get_den();
    return p > q ? p : q;
}

namespace {

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, g = 1, q = 1, x, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](const Integer& v) {
            Integer w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = abs(x - y);
                    q = q * d;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

// Finds a factor when n has two factors close to sqrt(n); 1 otherwise.
Integer fermat(const Integer& n, unsigned long steps) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer a, b2, b;
    mpz_sqrt(a.get_mpz_t(), n.get_mpz_t());
    if (a * a < n) ++a;
    for (unsigned long i = 0; i < steps; ++i, ++a) {
        b2 = a * a - n;
        if (mpz_perfect_square_p(b2.get_mpz_t())) {
            mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
            Integer d = a - b;
            if (d != 1 && d != n) return d;
            return 1;
        }
    }
    return 1;
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        factor_rec(s, out);
        factor_rec(s, out);
        return;
    }
    Integer d = fermat(n, 100000);
    if (d == 1) d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n0) {
    if (n0 == 0) fail(Errc::InvalidArgument, "factor_integer(0)");
    Integer n = abs(n0);
    std::map<Integer, unsigned> out;
    for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, out);
    return {out.begin(), out.end()};
}

IntegerSquareSplit square_split(const Integer& n) {
    if (n == 0) fail(Errc::InvalidArgument, "square_split(0)");
    IntegerSquareSplit r{sgn(n) < 0 ? Integer(-1) : Integer(1), 1};
    for (const auto& [p, e] : factor_integer(n)) {
        if (e % 2) r.kernel *= p;
        for (unsigned i = 0; i < e / 2; ++i) r.root *= p;
    }
    return r;
}

RationalSquareSplit square_split(const Rational& x) {
    if (sgn(x) == 0) fail(Errc::InvalidArgument, "square_split(0)");
    // p/q = p*q / q^2
    IntegerSquareSplit s = square_split(Integer(x.get_num() * x.get_den()));
    return {s.kernel, make_rational(s.root, x.get_den())};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (sgn(x) == 0) return Rational(0);
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
        return std::nullopt;
    Integer p, q;
    mpz_sqrt(p.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(q.get_mpz_t(), x.get_den_mpz_t());
    return make_rational(p, q);
}

Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (sgn(x) == 0) fail(Errc::DivisionByZero, "0^negative");
        return pow(Rational(1 / x), -e);
    }
    Integer p, q;
    mpz_pow_ui(p.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(q.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(p, q);
}

Integer pow(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

}  // namespace ect
