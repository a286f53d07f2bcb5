#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pfk/polyq.hpp"
#include "pfk/rational.hpp"

namespace pfk {

// High-precision complex value (GMP floats).
struct Cplx {
    mpf_class re, im;
    Cplx() : re(0, 256), im(0, 256) {}
    Cplx(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

Cplx cplx_add(const Cplx& a, const Cplx& b);
Cplx cplx_sub(const Cplx& a, const Cplx& b);
Cplx cplx_mul(const Cplx& a, const Cplx& b);
Cplx cplx_div(const Cplx& a, const Cplx& b);
mpf_class cplx_abs2(const Cplx& a);

// "re" or "re + im*i" with the requested number of significant digits.
std::string cplx_str(const Cplx& a, int digits = 50);

// All complex roots of a squarefree polynomial over Q by the Durand-Kerner
// iteration, deterministically ordered (real part, then imaginary part).
std::vector<Cplx> complex_roots(const PolyQ& p, long prec_bits = 256);

// Same for complex coefficients (constant coefficient first).
std::vector<Cplx> complex_roots_c(std::vector<Cplx> coeffs, long prec_bits = 256);

// Yun decomposition: pairwise-coprime squarefree factors with multiplicities,
// monic, multiplicities ascending.
std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p);

// Factor a squarefree polynomial over Q into irreducible integer-primitive
// factors (positive leading coefficient), by clustering complex roots into
// conjugation-closed subsets and verifying candidates by exact division.
// Deterministic order: by degree, then root order.
std::vector<PolyQ> factor_squarefree(const PolyQ& p);

// Rational roots with multiplicities; remaining factor (rational-root-free,
// monic) returned through cofactor when non-null.
std::vector<std::pair<Rat, int>> rational_roots(const PolyQ& p, PolyQ* cofactor = nullptr);

} // namespace pfk
