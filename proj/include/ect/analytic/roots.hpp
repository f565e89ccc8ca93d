#pragma once

#include <vector>

#include "ect/analytic/bigfloat.hpp"
#include "ect/arith/algnum.hpp"
#include "ect/arith/poly_q.hpp"
#include "ect/arith/quad.hpp"

namespace ect {

// All complex roots of a squarefree polynomial (coefficients low to high)
// by Aberth iteration, sorted by real part then imaginary part.
std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& coeffs, mpfr_prec_t bits);
std::vector<BigComplex> complex_roots(const QPoly& p, mpfr_prec_t bits);

// Drops an imaginary part below 2^-(bits/2) relative to |z|: values known to be
// real stay on the real axis, so principal square roots are stable across
// precisions.
BigComplex snap_real(const BigComplex& z);
BigComplex stable_sqrt(const BigComplex& z);

// Value of a tower element under every complex embedding, one per choice of
// signs of the canonical generators.
std::vector<BigComplex> embeddings(const QuadElem& x, mpfr_prec_t bits);
BigComplex evaluate(const QPoly& p, const BigComplex& z);

}  // namespace ect
