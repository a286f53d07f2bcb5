#include "pfk/fit.hpp"

#include <algorithm>
#include <sstream>

#include "pfk/errors.hpp"

namespace pfk {

namespace {

bool vec_zero(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

void strip_content(std::vector<Int>& v) {
    Int g(0);
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (is_zero(g) || g == 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void sign_normalize(std::vector<Int>& v) {
    for (const auto& x : v) {
        if (is_zero(x)) continue;
        if (sgn(x) < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

} // namespace

std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> m, int ncols) {
    const int nrows = static_cast<int>(m.size());
    for (auto& row : m) {
        row.resize(static_cast<std::size_t>(ncols), Int(0));
        strip_content(row);
    }

    // forward elimination; pivot_col[k] records the pivot column of echelon row k
    std::vector<int> pivot_cols;
    std::vector<int> pivot_rows;
    std::vector<bool> used(static_cast<std::size_t>(nrows), false);
    for (int col = 0; col < ncols; ++col) {
        int best = -1;
        std::size_t best_bits = 0;
        for (int r = 0; r < nrows; ++r) {
            if (used[static_cast<std::size_t>(r)]) continue;
            const Int& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (is_zero(v)) continue;
            std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
            if (best < 0 || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best < 0) continue;
        used[static_cast<std::size_t>(best)] = true;
        pivot_cols.push_back(col);
        pivot_rows.push_back(best);
        const std::vector<Int>& prow = m[static_cast<std::size_t>(best)];
        const Int p = prow[static_cast<std::size_t>(col)];
        for (int r = 0; r < nrows; ++r) {
            if (used[static_cast<std::size_t>(r)]) continue;
            std::vector<Int>& row = m[static_cast<std::size_t>(r)];
            const Int q = row[static_cast<std::size_t>(col)]; // by value: the loop overwrites it
            if (is_zero(q)) continue;
            for (int c = 0; c < ncols; ++c)
                row[static_cast<std::size_t>(c)] =
                    p * row[static_cast<std::size_t>(c)] - q * prow[static_cast<std::size_t>(c)];
            strip_content(row);
        }
    }

    // back substitution per free column, over Q, then primitive scaling
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Int>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> x(static_cast<std::size_t>(ncols), Rat(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (int k = static_cast<int>(pivot_cols.size()) - 1; k >= 0; --k) {
            const int pc = pivot_cols[static_cast<std::size_t>(k)];
            const std::vector<Int>& row = m[static_cast<std::size_t>(pivot_rows[static_cast<std::size_t>(k)])];
            Rat acc(0);
            for (int c = pc + 1; c < ncols; ++c) {
                if (is_zero(row[static_cast<std::size_t>(c)]) || is_zero(x[static_cast<std::size_t>(c)]))
                    continue;
                acc += Rat(row[static_cast<std::size_t>(c)]) * x[static_cast<std::size_t>(c)];
            }
            x[static_cast<std::size_t>(pc)] = -acc / Rat(row[static_cast<std::size_t>(pc)]);
        }
        // clear denominators, strip content, fix sign
        Int lcm(1);
        for (const auto& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<Int> iv;
        iv.reserve(x.size());
        for (const auto& v : x) iv.push_back(v.get_num() * (lcm / v.get_den()));
        strip_content(iv);
        sign_normalize(iv);
        basis.push_back(std::move(iv));
    }
    return basis;
}

std::vector<std::vector<Int>> rational_kernel(const std::vector<std::vector<Rat>>& m, int ncols) {
    std::vector<std::vector<Int>> im;
    im.reserve(m.size());
    for (const auto& row : m) {
        Int lcm(1);
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const auto& v : row) irow.push_back(v.get_num() * (lcm / v.get_den()));
        im.push_back(std::move(irow));
    }
    return integer_kernel(std::move(im), ncols);
}

FitResult fit_operator(const Series<Rat>& s, int d, int r, int n_eq) {
    if (d < 0 || r < 0) throw precondition_error("fit_operator: negative degree bounds");
    const int avail = s.order() + 1;
    if (n_eq > avail)
        throw insufficient_terms_error("fit needs " + std::to_string(n_eq) +
                                       " coefficients, series has " + std::to_string(avail));
    const int unknowns = (d + 1) * (r + 1);

    // row n: sum_{i<=min(r,n)} sum_j p_{ij} (n-i+mu)^j a_{n-i} = 0
    std::vector<std::vector<Rat>> m;
    m.reserve(static_cast<std::size_t>(n_eq));
    for (int n = 0; n < n_eq; ++n) {
        std::vector<Rat> row(static_cast<std::size_t>(unknowns), Rat(0));
        for (int i = 0; i <= std::min(r, n); ++i) {
            const Rat& a = s.c[static_cast<std::size_t>(n - i)];
            if (is_zero(a)) continue;
            Rat arg = Rat(n - i) + s.mu;
            Rat pw(1);
            for (int j = 0; j <= d; ++j) {
                row[static_cast<std::size_t>(i * (d + 1) + j)] = a * pw;
                pw *= arg;
            }
        }
        m.push_back(std::move(row));
    }

    auto basis = rational_kernel(m, unknowns);

    FitResult out;
    out.n_eq = n_eq;
    out.unknowns = unknowns;
    out.underdetermined = n_eq < unknowns;
    for (const auto& v : basis) {
        std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(r) + 1,
                                          std::vector<Rat>(static_cast<std::size_t>(d) + 1, Rat(0)));
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= d; ++j)
                raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    Rat(v[static_cast<std::size_t>(i * (d + 1) + j)]);
        out.kernel.push_back(make_theta_operator(raw));
    }
    return out;
}

std::string SearchTrace::str() const {
    std::ostringstream os;
    for (const auto& l : lines) os << l << "\n";
    return os.str();
}

ThetaOperator find_minimal_operator(const Series<Rat>& s, int d_max, int r_max, int holdout,
                                    SearchTrace* trace) {
    bool all_zero = true;
    for (const auto& v : s.c)
        if (!is_zero(v)) {
            all_zero = false;
            break;
        }
    if (all_zero) throw not_found_error("zero series rejected");

    struct Cand {
        int d, r;
    };
    std::vector<Cand> cands;
    for (int d = 0; d <= d_max; ++d)
        for (int r = 0; r <= r_max; ++r) cands.push_back({d, r});
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        long ua = static_cast<long>(a.d + 1) * (a.r + 1), ub = static_cast<long>(b.d + 1) * (b.r + 1);
        if (ua != ub) return ua < ub;
        return a.d < b.d;
    });

    const int avail = s.order() + 1;
    for (const auto& [d, r] : cands) {
        const long need = required_terms(d, r, holdout);
        if (avail < need) {
            if (trace)
                trace->note("(d=" + std::to_string(d) + ", r=" + std::to_string(r) + "): skipped, needs " +
                            std::to_string(need) + " terms, have " + std::to_string(avail));
            continue;
        }
        const int n_eq = (d + 1) * (r + 1);
        FitResult fit = fit_operator(s, d, r, n_eq);
        int verified = -1;
        for (std::size_t k = 0; k < fit.kernel.size(); ++k) {
            const ThetaOperator& op = fit.kernel[k];
            Series<Rat> res = apply_operator(op, s);
            bool zero = true;
            for (const auto& v : res.c)
                if (!is_zero(v)) {
                    zero = false;
                    break;
                }
            if (zero) {
                verified = static_cast<int>(k);
                break;
            }
        }
        if (trace)
            trace->note("(d=" + std::to_string(d) + ", r=" + std::to_string(r) + "): " +
                        std::to_string(n_eq) + " equations, kernel dim " +
                        std::to_string(fit.kernel.size()) +
                        (verified >= 0 ? ", verified on all " + std::to_string(avail) + " terms"
                                       : ", no kernel element survives the holdout"));
        if (verified >= 0) return fit.kernel[static_cast<std::size_t>(verified)];
    }
    throw not_found_error("no operator with d <= " + std::to_string(d_max) +
                          ", r <= " + std::to_string(r_max) + " annihilates the series" +
                          (trace ? "\n" + trace->str() : ""));
}

} // namespace pfk
