#include "pfk/selfdual.hpp"

#include "pfk/errors.hpp"

namespace pfk {

RatFuncOperator monicize(const DOperator& l) {
    RatFuncOperator out;
    RatFunc lead(l.lead());
    for (const auto& b : l.b) out.c.push_back(RatFunc(b) / lead);
    return out;
}

RatFuncOperator rf_adjoint(const RatFuncOperator& a) {
    const int m = a.order();
    RatFuncOperator out;
    out.c.assign(static_cast<std::size_t>(m) + 1, RatFunc());
    for (int k = 0; k <= m; ++k) {
        RatFunc der = a.c[static_cast<std::size_t>(k)];
        for (int j = k; j >= 0; --j) {
            Rat coef(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
            if (k % 2 != 0) coef = -coef;
            out.c[static_cast<std::size_t>(j)] =
                out.c[static_cast<std::size_t>(j)] + der * RatFunc::constant(coef);
            if (j > 0) der = der.derivative();
        }
    }
    return out;
}

namespace {

// A o u for a function u: delta^k o u = sum_l C(k,l) u^{(k-l)} delta^l
RatFuncOperator rf_compose_function(const RatFuncOperator& a, const RatFunc& u) {
    const int m = a.order();
    RatFuncOperator out;
    out.c.assign(static_cast<std::size_t>(m) + 1, RatFunc());
    // precompute u derivatives
    std::vector<RatFunc> du(static_cast<std::size_t>(m) + 1);
    du[0] = u;
    for (int i = 1; i <= m; ++i) du[static_cast<std::size_t>(i)] = du[static_cast<std::size_t>(i - 1)].derivative();
    for (int k = 0; k <= m; ++k) {
        const RatFunc& ck = a.c[static_cast<std::size_t>(k)];
        if (ck.is_zero_func()) continue;
        for (int l = 0; l <= k; ++l) {
            Rat bin(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(l)));
            out.c[static_cast<std::size_t>(l)] =
                out.c[static_cast<std::size_t>(l)] +
                ck * du[static_cast<std::size_t>(k - l)] * RatFunc::constant(bin);
        }
    }
    return out;
}

// A o delta: shift coefficients up one delta power
RatFuncOperator rf_compose_delta(const RatFuncOperator& a) {
    RatFuncOperator out;
    out.c.assign(a.c.size() + 1, RatFunc());
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k + 1] = a.c[k];
    return out;
}

} // namespace

RatFuncOperator rf_conjugate(const RatFuncOperator& a, const RatFunc& u) {
    // substitute delta -> delta + u via Horner in the noncommutative variable:
    // result = sum_k c_k (delta+u)^k built as (((c_m)(delta+u) + c_{m-1})(delta+u) + ...)
    const int m = a.order();
    RatFuncOperator acc;
    acc.c.assign(1, a.c[static_cast<std::size_t>(m)]);
    for (int k = m - 1; k >= 0; --k) {
        RatFuncOperator shifted = rf_compose_delta(acc);
        RatFuncOperator mixed = rf_compose_function(acc, u);
        RatFuncOperator next;
        next.c.assign(shifted.c.size(), RatFunc());
        for (std::size_t i = 0; i < shifted.c.size(); ++i) {
            next.c[i] = shifted.c[i];
            if (i < mixed.c.size()) next.c[i] = next.c[i] + mixed.c[i];
        }
        next.c[0] = next.c[0] + a.c[static_cast<std::size_t>(k)];
        acc = std::move(next);
    }
    return acc;
}

bool rf_equal(const RatFuncOperator& a, const RatFuncOperator& b) {
    const std::size_t n = std::max(a.c.size(), b.c.size());
    for (std::size_t i = 0; i < n; ++i) {
        RatFunc av = i < a.c.size() ? a.c[i] : RatFunc();
        RatFunc bv = i < b.c.size() ? b.c[i] : RatFunc();
        if (!(av == bv)) return false;
    }
    return true;
}

bool self_adjoint_check(const DOperator& l) {
    if (l.order() != 4)
        throw not_supported_error("self_adjoint_check is defined for order-4 operators");
    RatFuncOperator a = monicize(l);
    RatFuncOperator astar = rf_adjoint(a);
    RatFunc u = a.c[3] * RatFunc::constant(Rat(-1, 2)); // u = -a3/2
    RatFuncOperator conj = rf_conjugate(a, u);
    return rf_equal(conj, astar);
}

bool self_adjoint_check(const ThetaOperator& p) { return self_adjoint_check(theta_to_d(p)); }

bool self_adjoint_closed_form(const ThetaOperator& p) {
    DOperator l = theta_to_d(p);
    if (l.order() != 4)
        throw not_supported_error("self_adjoint_closed_form is defined for order-4 operators");
    RatFuncOperator a = monicize(l);
    const RatFunc& a1 = a.c[1];
    const RatFunc& a2 = a.c[2];
    const RatFunc& a3 = a.c[3];
    RatFunc rhs = a2 * a3 * RatFunc::constant(Rat(1, 2)) -
                  a3 * a3 * a3 * RatFunc::constant(Rat(1, 8)) + a2.derivative() -
                  a3 * a3.derivative() * RatFunc::constant(Rat(3, 4)) -
                  a3.derivative().derivative() * RatFunc::constant(Rat(1, 2));
    return a1 == rhs;
}

} // namespace pfk
