#include <algorithm>

#include "pfk/periods.hpp"

namespace pfk {

// g <- g * f, pruned: a monomial survives only if its exponent vector can
// still return to 0 within `remaining` further multiplications by f, judged
// per coordinate against the extreme increments of f's support.
Series<Rat> constant_term_series(const LaurentPoly& f, int N, bool prune) {
    if (N < 0) throw precondition_error("constant_term_series: negative order");
    const int nv = f.nvars();

    std::vector<int32_t> lo(static_cast<std::size_t>(nv), 0), hi(static_cast<std::size_t>(nv), 0);
    bool first = true;
    for (const auto& [e, v] : f.terms()) {
        for (int c = 0; c < nv; ++c) {
            int32_t x = e[static_cast<std::size_t>(c)];
            if (first) {
                lo[static_cast<std::size_t>(c)] = hi[static_cast<std::size_t>(c)] = x;
            } else {
                lo[static_cast<std::size_t>(c)] = std::min(lo[static_cast<std::size_t>(c)], x);
                hi[static_cast<std::size_t>(c)] = std::max(hi[static_cast<std::size_t>(c)], x);
            }
        }
        first = false;
    }

    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    LaurentPoly g = LaurentPoly::constant(nv, Rat(1));
    out.push_back(Rat(1)); // [f^0]_0
    for (int m = 1; m <= N; ++m) {
        LaurentPoly next = g * f;
        if (prune) {
            const int64_t rem = N - m;
            LaurentPoly kept(nv);
            for (const auto& [e, v] : next.terms()) {
                bool ok = true;
                for (int c = 0; c < nv && ok; ++c) {
                    int64_t back = -static_cast<int64_t>(e[static_cast<std::size_t>(c)]);
                    int64_t lo_reach = std::min<int64_t>(0, rem * lo[static_cast<std::size_t>(c)]);
                    int64_t hi_reach = std::max<int64_t>(0, rem * hi[static_cast<std::size_t>(c)]);
                    if (back < lo_reach || back > hi_reach) ok = false;
                }
                if (ok) kept.add_term(e, v);
            }
            next = std::move(kept);
        }
        g = std::move(next);
        out.push_back(g.constant_term());
    }
    return Series<Rat>(std::move(out), Rat(0));
}

} // namespace pfk
