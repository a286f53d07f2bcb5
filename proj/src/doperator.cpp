#include "pfk/doperator.hpp"

#include "pfk/errors.hpp"

namespace pfk {

namespace {

// Stirling numbers of the second kind up to jmax.
std::vector<std::vector<Int>> stirling2(int jmax) {
    std::vector<std::vector<Int>> s(static_cast<std::size_t>(jmax) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(jmax) + 1, Int(0)));
    s[0][0] = 1;
    for (int j = 1; j <= jmax; ++j)
        for (int k = 1; k <= j; ++k)
            s[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                s[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] +
                Int(k) * s[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)];
    return s;
}

} // namespace

DOperator normalize_d(std::vector<PolyQ> b) {
    while (b.size() > 1 && b.back().is_zero_poly()) b.pop_back();
    if (b.empty() || (b.size() == 1 && b[0].is_zero_poly()))
        throw precondition_error("zero operator");
    // common denominator and integer content, sign preserved
    Int lcm(1), content(0);
    for (const auto& p : b)
        for (const auto& v : p.coeffs())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& p : b)
        for (const auto& v : p.coeffs()) {
            Int w = v.get_num() * (lcm / v.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.get_mpz_t());
        }
    Rat scale = Rat(lcm) / Rat(content);
    DOperator out;
    for (auto& p : b) out.b.push_back(p.scaled(scale));
    return out;
}

DOperator theta_to_d(const ThetaOperator& p) {
    const int d = p.d();
    auto s2 = stirling2(d);
    std::vector<PolyQ> b(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        // b_k(t) = t^k * sum_i t^i [sum_j p_{ij} S(j,k)]
        std::vector<Rat> inner(static_cast<std::size_t>(p.r()) + 1, Rat(0));
        for (int i = 0; i <= p.r(); ++i)
            for (int j = k; j <= d; ++j)
                inner[static_cast<std::size_t>(i)] +=
                    Rat(p.coeff(i, j)) * Rat(s2[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
        b[static_cast<std::size_t>(k)] = PolyQ(std::move(inner)).times_power(k);
    }
    return normalize_d(std::move(b));
}

ThetaOperator d_to_theta(const DOperator& l) {
    const int m = l.order();
    // delta^k = t^{-k} theta(theta-1)...(theta-k+1); multiply through by t^c
    // with c = max_k max(0, k - val(b_k)) so every power of t is nonnegative.
    int c = 0;
    for (int k = 0; k <= m; ++k) {
        if (l.b[static_cast<std::size_t>(k)].is_zero_poly()) continue;
        int val = l.b[static_cast<std::size_t>(k)].valuation();
        c = std::max(c, k - val);
    }
    // falling factorial polys
    std::vector<PolyQ> fall(static_cast<std::size_t>(m) + 1);
    fall[0] = PolyQ::constant(Rat(1));
    for (int k = 1; k <= m; ++k) {
        PolyQ lin(std::vector<Rat>{Rat(-(k - 1)), Rat(1)}); // theta - (k-1)
        fall[static_cast<std::size_t>(k)] = fall[static_cast<std::size_t>(k - 1)] * lin;
    }
    // t^c b_k(t) t^{-k} FF_k(theta); t^a theta^j contributes rows[a][j], and
    // commuting t^a past nothing is needed since all t powers sit on the left
    std::vector<std::vector<Rat>> rows;
    auto ensure_row = [&rows](int i, int width) {
        if (static_cast<int>(rows.size()) <= i)
            rows.resize(static_cast<std::size_t>(i) + 1);
        for (auto& row : rows)
            if (static_cast<int>(row.size()) < width) row.resize(static_cast<std::size_t>(width), Rat(0));
    };
    for (int k = 0; k <= m; ++k) {
        const PolyQ& bk = l.b[static_cast<std::size_t>(k)];
        if (bk.is_zero_poly()) continue;
        const PolyQ& ff = fall[static_cast<std::size_t>(k)];
        for (int a = 0; a <= bk.degree(); ++a) {
            if (is_zero(bk[a])) continue;
            int trow = a + c - k;
            if (trow < 0) throw precondition_error("d_to_theta: internal valuation bug");
            ensure_row(trow, m + 1);
            for (int j = 0; j <= ff.degree(); ++j)
                rows[static_cast<std::size_t>(trow)][static_cast<std::size_t>(j)] += bk[a] * ff[j];
        }
    }
    return make_theta_operator(rows);
}

DOperator d_compose(const DOperator& a, const DOperator& b) {
    // delta^i o g = sum_l C(i,l) g^{(i-l)} delta^l
    const int na = a.order(), nb = b.order();
    std::vector<PolyQ> out(static_cast<std::size_t>(na + nb) + 1);
    for (int i = 0; i <= na; ++i) {
        const PolyQ& ai = a.b[static_cast<std::size_t>(i)];
        if (ai.is_zero_poly()) continue;
        for (int j = 0; j <= nb; ++j) {
            PolyQ g = b.b[static_cast<std::size_t>(j)];
            if (g.is_zero_poly()) continue;
            // a_i delta^i (g delta^j) = a_i sum_l C(i,l) g^{(i-l)} delta^{l+j}
            PolyQ deriv = g;
            for (int l = i; l >= 0; --l) {
                // deriv currently g^{(i-l)}
                Rat binom_il(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(l)));
                out[static_cast<std::size_t>(l + j)] =
                    out[static_cast<std::size_t>(l + j)] + (ai * deriv).scaled(binom_il);
                if (l > 0) deriv = deriv.derivative();
                if (deriv.is_zero_poly() && l > 0) {
                    // remaining lower l terms vanish once g differentiates to zero
                    break;
                }
            }
        }
    }
    return normalize_d(std::move(out));
}

DOperator formal_adjoint(const DOperator& l) {
    // (L*)_j = sum_{k>=j} (-1)^k C(k,j) b_k^{(k-j)}
    const int m = l.order();
    std::vector<PolyQ> out(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        PolyQ der = l.b[static_cast<std::size_t>(k)];
        for (int j = k; j >= 0; --j) {
            // der = b_k^{(k-j)}
            Rat coef(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
            if (k % 2 != 0) coef = -coef;
            out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j)] + der.scaled(coef);
            if (j > 0) der = der.derivative();
        }
    }
    return normalize_d(std::move(out));
}

std::string d_pretty(const DOperator& l) {
    std::string s;
    for (int k = l.order(); k >= 0; --k) {
        const PolyQ& bk = l.b[static_cast<std::size_t>(k)];
        if (bk.is_zero_poly()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + polyq_str(bk) + ")";
        if (k > 0) s += "*D^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

} // namespace pfk
