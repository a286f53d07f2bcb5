#pragma once

#include <string>
#include <vector>

#include "pfk/rational.hpp"
#include "pfk/series.hpp"
#include "pfk/theta_operator.hpp"

namespace pfk {

// Primitive integer kernel basis of an integer matrix (ncols unknowns), by
// fraction-free cross-multiplication elimination with per-row content
// stripping.  Deterministic: pivot = smallest (bit size, row index) nonzero
// entry in the leftmost open column; basis vectors ordered by free column,
// each sign-normalized (first nonzero entry positive).
std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> m, int ncols);

// Convenience for rational systems: rows are scaled to primitive integer rows
// first.
std::vector<std::vector<Int>> rational_kernel(const std::vector<std::vector<Rat>>& m, int ncols);

struct FitResult {
    std::vector<ThetaOperator> kernel; // normalized operators, deterministic order
    int n_eq = 0;
    int unknowns = 0;
    bool underdetermined = false;      // n_eq < unknowns: kernel may be spuriously large
};

// Exact linear fit: unknowns are the (d+1)(r+1) entries of the theta-form
// matrix, equations impose sum_i P_i(n-i+mu) a_{n-i} = 0 for n = 0..n_eq-1.
// Throws insufficient_terms_error when the series has fewer than n_eq
// coefficients.
FitResult fit_operator(const Series<Rat>& s, int d, int r, int n_eq);

struct SearchTrace {
    std::vector<std::string> lines;
    void note(std::string s) { lines.push_back(std::move(s)); }
    std::string str() const;
};

// Smallest-first search over (d, r): increasing (d+1)(r+1), ties to smaller
// d.  A candidate is accepted only if apply_operator annihilates the full
// series, holdout tail included.  Throws not_found_error when the range is
// exhausted.
ThetaOperator find_minimal_operator(const Series<Rat>& s, int d_max, int r_max, int holdout = 6,
                                    SearchTrace* trace = nullptr);

inline long required_terms(int d, int r, int holdout) {
    return static_cast<long>(d + 1) * (r + 1) + holdout;
}

} // namespace pfk
