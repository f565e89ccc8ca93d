#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ect/arith/algnum.hpp"
#include "ect/ec/torsion.hpp"

namespace ect {

// Polynomials in b with coefficients in Q[a].
using BivPoly = Poly<QPoly>;

// All roots of a monic irreducible g over Q when they lie in a quadratic
// tower of depth <= 2 (degree 1, 2, or a biquadratic quartic).
std::optional<std::vector<QuadElem>> tower_roots(const QPoly& g);

struct SurfaceSpec {
    std::array<Rational, 3> xcoords;
    std::optional<Rational> fixed_b;  // constraint b = fixed_b
};
SurfaceSpec make_surface_spec(const std::array<Rational, 3>& xs, std::optional<Rational> fixed_b = std::nullopt);

// The x-only division polynomial of index n at x = c, as a polynomial in (a, b).
BivPoly division_poly_ab(int n, const Rational& c);

// Sylvester determinant in b with formal degrees, by fraction-free elimination over Q[a].
QPoly resultant_in_b(const BivPoly& p, const BivPoly& q);

template <class F>
struct InstanceRecord {
    F a, b;
    std::array<int, 3> orders;
    std::array<TorsionCertificate<F>, 3> certificates;
};

// A root in a that survived elimination but whose b (or a itself) could not
// be placed exactly; real roots carry isolating intervals.
struct NumericOnlyRoot {
    QPoly minpoly_a;
    std::vector<RootInterval> real_intervals;
    int nonreal_count = 0;
    std::string reason;
};

// 2-torsion at two of the points fixes (a, b) linearly; the residual is the
// third division polynomial there.
struct LinearWitness {
    int i, j;
    Rational a, b, residual;
};

struct SearchConfig {
    long budget = 4000;
    int threads = 1;
};

struct SolveResult {
    std::array<int, 3> orders;
    std::vector<InstanceRecord<QuadElem>> tower;
    std::vector<InstanceRecord<AlgNum>> algebraic;
    std::vector<NumericOnlyRoot> numeric_only;
    std::optional<LinearWitness> witness;
    long resultant_degree = 0;
};

SolveResult solve_order_system(const SurfaceSpec& spec, const std::array<int, 3>& orders,
                               const SearchConfig& cfg = {});

// Every triple with 2 <= N_i <= nmax, in lexicographic order, spread over cfg.threads workers.
std::vector<SolveResult> solve_all_orders(const SurfaceSpec& spec, int nmax, const SearchConfig& cfg = {});

// a-values with x = 1 of exact order N on y^2 = x^3 + ax, plus the matching
// certificate at x = -1.
struct CMInstance {
    bool in_tower = true;
    QuadElem a_tower;
    AlgNum a_alg;      // a = theta in Q[theta]/(minpoly)
    QPoly minpoly;     // minimal polynomial of a over Q
    std::variant<TorsionCertificate<QuadElem>, TorsionCertificate<AlgNum>> cert_plus, cert_minus;
    int conjugates() const { return in_tower ? 1 : minpoly.degree(); }
};

std::map<int, std::vector<CMInstance>> cm_surface_scan(int nmax, const SearchConfig& cfg = {});

struct AffineIdentity {
    std::array<Integer, 3> lambda;  // sum lambda_i (c_i^3 + a c_i + b)
    Rational a_coeff, b_coeff, constant;
    Rational determinant;  // det of rows (c_i^3, c_i, 1)
};
AffineIdentity second_difference_identity(const std::array<Rational, 3>& xs = {1, 2, 3});

}  // namespace ect
