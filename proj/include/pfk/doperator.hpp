#pragma once

#include <string>
#include <vector>

#include "pfk/polyq.hpp"
#include "pfk/theta_operator.hpp"

namespace pfk {

// Operator sum_k b_k(t) (d/dt)^k with polynomial coefficients over Q,
// normalized to integer collectively-coprime coefficients (no sign rule, so
// the adjoint of delta stays -delta).
struct DOperator {
    std::vector<PolyQ> b; // b[k] multiplies (d/dt)^k

    int order() const { return static_cast<int>(b.size()) - 1; }
    const PolyQ& lead() const { return b.back(); }
    bool operator==(const DOperator& o) const { return b == o.b; }
};

// Strip zero leading coefficients and integer content (sign preserved).
DOperator normalize_d(std::vector<PolyQ> b);

// theta^j = sum_k S(j,k) t^k delta^k (Stirling numbers of the second kind).
DOperator theta_to_d(const ThetaOperator& p);

// delta^k = t^{-k} theta (theta-1) ... (theta-k+1); the result is the theta
// form of t^c L for the smallest c >= 0 clearing negative powers.
ThetaOperator d_to_theta(const DOperator& l);

// Composition (a after b).
DOperator d_compose(const DOperator& a, const DOperator& b);

// Formal adjoint  L* y = sum_k (-1)^k (b_k y)^{(k)}.
DOperator formal_adjoint(const DOperator& l);

std::string d_pretty(const DOperator& l);

} // namespace pfk
