#pragma once

#include <optional>
#include <vector>

#include "pfk/multipoly.hpp"
#include "pfk/quad_ext.hpp"
#include "pfk/rational.hpp"
#include "pfk/series.hpp"

namespace pfk {

// Period expansion of a vanishing-cycle integral:
//   period = sqrt(prefactor_square) * pi^pi_power * t^{series.mu} * series(t)
// with series normalized to leading coefficient 1 and rational coefficients.
// When the algebraic prefactor is itself rational, `prefactor` holds it
// exactly (positive branch).
struct PeriodExpansion {
    Rat prefactor_square;
    std::optional<Rat> prefactor;
    Rat pi_power; // half-integer, stored as a rational
    Series<Rat> series;
};

// Expansion of \int_T prod x_i^{k_i} (x_1..x_n (1 - sum x))^{-1/2} dx over the
// standard n-simplex, normalized by the k = 0 value (the pi-power prefactor
// cancels in the ratio).
Rat simplex_moment(int n, const std::vector<long>& k);

// P is a polynomial in x_1..x_n and t (t is the last variable, index n);
// the integrand is (x_1...x_n (t - sum x) P)^{-1/2} over the shrinking
// simplex, expanded to order N after the x -> t x substitution.
struct SimplexProblem {
    int n = 0;
    PolyRat P;   // n+1 variables, t last
    int order = 0;
};

PeriodExpansion simplex_period(const SimplexProblem& p);

// Principal period sum_m [f^m]_0 t^m of a Laurent polynomial, computed by
// iterated multiplication.  Pruning discards monomials that cannot return to
// exponent 0 within the remaining multiplications (Newton-polytope bounds);
// it never changes the result and exists purely for speed.
Series<Rat> constant_term_series(const LaurentPoly& f, int N, bool prune = true);

// I(2k)/I(0) for monomial moments over the unit n-ball; odd exponents are the
// caller's business (they integrate to zero and are skipped).
Rat ball_moment(int n, const std::vector<long>& k);

// A1 critical point data: f = f_2 + f_3 + ... with nondegenerate f_2, form
// numerator A, both polynomials in x_1..x_n (no t).
struct MorseProblem {
    int n = 0;
    PolyRat f;
    PolyRat A;
    int order = 0;
};

struct MorseNormalization {
    QuadCtxPtr ctx;                 // adjoined square roots of the diagonal values
    MultiPoly<QuadExt> g;           // normalized f: sum x_i^2 up to the working degree
    MultiPoly<QuadExt> omega;       // transformed numerator, Jacobian factors included
    QuadExt d;                      // product of the 1/sqrt(c_i) rescale factors
    std::vector<Rat> diagonal;      // the c_i of the Gauss diagonalization
    int working_degree = 0;
};

// Formal Morse lemma: diagonalize f_2, rescale to sum x_i^2 over a
// multi-quadratic extension, then iteratively remove the lowest non-quadratic
// homogeneous part, transporting the volume form (numerator times Jacobian).
MorseNormalization morse_normalize(const MorseProblem& p, int working_degree = -1);

// Period of the vanishing sphere: phi(t) = d/dt int_{f <= t} A dx, expanded
// as prefactor * t^{n/2-1} (1 + A_1 t + ...) with rational A_i.
PeriodExpansion morse_period(const MorseProblem& p);

} // namespace pfk
