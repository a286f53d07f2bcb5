#pragma once

#include <string>
#include <vector>

#include "pfk/rational.hpp"
#include "pfk/series.hpp"
#include "pfk/theta_operator.hpp"

namespace pfk {

// Frobenius deformation data at a MUM-point: Phi(t,eps) = sum A_n(eps) t^{n+eps}
// with A_0 = 1, computed in Q[eps]/(eps^m).  S[j] collects the eps^j parts, so
// the actual solutions are phi_k = sum_{a<=k} log(t)^a / a! * S[k-a].
struct FrobeniusBasis {
    int order = 0;
    std::vector<Series<Rat>> S;

    const Series<Rat>& holomorphic() const { return S[0]; } // phi_0
};

FrobeniusBasis frobenius_solutions(const ThetaOperator& p, int N);

// sum_a log(t)^a * g[a](t); all components share offset and truncation.
struct LogSeries {
    std::vector<Series<Rat>> g;
};

// phi_k of the basis as an explicit log-polynomial.
LogSeries frobenius_phi(const FrobeniusBasis& basis, int k);

// P applied to a log-polynomial series (theta mixes the log powers).
LogSeries apply_operator_log(const ThetaOperator& p, const LogSeries& s);

struct MirrorMap {
    Series<Rat> q_of_t; // q = t exp(rho/phi0) as a series 0 + t + ...
    Series<Rat> t_of_q; // compositional inverse
};

MirrorMap mirror_map(const FrobeniusBasis& basis);

// Yukawa coupling K(q) = n0 * D^2(phi2/phi0 transported to q), D = q d/dq.
// Aborts with normalization_failure_error when the structural W(0) = 1
// normalization is violated.
Series<Rat> yukawa(const ThetaOperator& p, const FrobeniusBasis& basis, const Rat& n0, int N);

struct InstantonTable {
    Rat n0;
    std::vector<Rat> nd;          // nd[d-1] = n_d
    std::vector<bool> integral;
    Int common_denominator;       // lcm of the n_d denominators

    std::string render(bool machine = false) const;
};

// Lambert inversion n_d = (c_d - sum_{e|d, e<d} n_e e^3) / d^3.
InstantonTable instanton_numbers(const Series<Rat>& K, int D);

// Re-expansion n0 + sum n_d d^3 q^d/(1-q^d) to order D (round-trip check).
Series<Rat> lambert_expand(const InstantonTable& table, int D);

struct IntegralityReport {
    bool phi0_integral = false;
    int phi0_order = 0;
    bool q_integral = false;
    int q_order = 0;
    Int nd_common_denominator;
    bool nd_integral = false;
    int depth = 0;
    std::string text;
};

IntegralityReport integrality_report(const ThetaOperator& p, int N, int D, const Rat& n0);

} // namespace pfk
