#pragma once

#include "pfk/doperator.hpp"
#include "pfk/polyq.hpp"
#include "pfk/theta_operator.hpp"

namespace pfk {

// Symplectic self-duality of an order-4 operator: monicize L over Q(t),
// form the formal adjoint L*, and test whether conjugating L by the function
// w with w'/w = -a3/2 (i.e. substituting delta -> delta - a3/2) reproduces
// L*.  Everything stays inside rational-function arithmetic.
bool self_adjoint_check(const ThetaOperator& p);
bool self_adjoint_check(const DOperator& l);

// The closed-form coefficient identity
//   a1 = (1/2) a2 a3 - (1/8) a3^3 + a2' - (3/4) a3 a3' - (1/2) a3''
// for the monicized operator; cross-validated against the conjugation
// definition by the test suite (the conjugation definition is authoritative).
bool self_adjoint_closed_form(const ThetaOperator& p);

// Operator with rational-function coefficients in delta; the building block
// of the conjugation computation.
struct RatFuncOperator {
    std::vector<RatFunc> c; // c[k] multiplies delta^k

    int order() const { return static_cast<int>(c.size()) - 1; }
};

// Monicized delta-form coefficients a_0..a_m (a_m = 1).
RatFuncOperator monicize(const DOperator& l);

// Formal adjoint of a monic rational-function operator.
RatFuncOperator rf_adjoint(const RatFuncOperator& a);

// Substitute delta -> delta + u.
RatFuncOperator rf_conjugate(const RatFuncOperator& a, const RatFunc& u);

bool rf_equal(const RatFuncOperator& a, const RatFuncOperator& b);

} // namespace pfk
