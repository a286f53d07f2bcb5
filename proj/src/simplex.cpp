#include <cstdint>
#include <deque>
#include <utility>

#include "pfk/errors.hpp"
#include "pfk/periods.hpp"

namespace pfk {

namespace {

// Rising factorial (n+1)/2 * ((n+1)/2 + 1) * ... * ((n+1)/2 + len - 1).
Rat rising_half(int n_plus_1, long len) {
    Rat acc(1);
    Rat base(n_plus_1, 2);
    base.canonicalize();
    for (long i = 0; i < len; ++i) acc *= base + i;
    return acc;
}

// Rank lookup for exponent vectors (k_1..k_n) with sum <= D, ordered
// lexicographically with the last coordinate varying fastest (contiguous).
// Uses C(d+m, m) block counts; closed form via the hockey-stick identity.
struct SimplexIndexer {
    int n, D;
    // binom[a][b] = C(a, b) for b <= n+1
    std::vector<std::vector<int64_t>> binom;

    SimplexIndexer(int n_, int D_) : n(n_), D(D_) {
        int amax = D + n + 2;
        binom.assign(static_cast<std::size_t>(amax) + 1,
                     std::vector<int64_t>(static_cast<std::size_t>(n) + 2, 0));
        for (int a = 0; a <= amax; ++a) {
            binom[static_cast<std::size_t>(a)][0] = 1;
            for (int b = 1; b <= std::min(a, n + 1); ++b)
                binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    (a - 1 >= b ? binom[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] : 0) +
                    binom[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
        }
    }

    // number of vectors of length m with sum <= d
    int64_t count(int m, int d) const {
        if (d < 0) return 0;
        return binom[static_cast<std::size_t>(d + m)][static_cast<std::size_t>(m)];
    }

    // sum_{v=0}^{k-1} count(m, rem - v) = C(rem+m+1, m+1) - C(rem-k+m+1, m+1)
    int64_t block(int m, int rem, int k) const {
        if (k <= 0) return 0;
        int64_t hi = binom[static_cast<std::size_t>(rem + m + 1)][static_cast<std::size_t>(m + 1)];
        int lo_arg = rem - k + m + 1;
        int64_t lo = lo_arg >= 0 && lo_arg >= m + 1
                         ? binom[static_cast<std::size_t>(lo_arg)][static_cast<std::size_t>(m + 1)]
                         : (lo_arg >= 0 ? 0 : 0);
        return hi - lo;
    }

    int64_t size() const { return count(n, D); }

    int64_t rank(const int* k) const {
        int64_t r = 0;
        int rem = D;
        for (int j = 0; j < n; ++j) {
            r += block(n - 1 - j, rem, k[j]);
            rem -= k[j];
        }
        return r;
    }
};

// Iterates over all prefixes (k_1..k_{n-1}) with sum <= D in lexicographic
// order; the caller handles the contiguous run of the last coordinate.
struct PrefixIter {
    int n, D;
    std::vector<int> k; // size n-1
    int sum = 0;
    bool done = false;

    PrefixIter(int n_, int D_) : n(n_), D(D_), k(static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0), 0) {}

    bool next() { // advance to the next prefix; returns false when exhausted
        for (int j = n - 2; j >= 0; --j) {
            if (sum < D) {
                ++k[static_cast<std::size_t>(j)];
                ++sum;
                return true;
            }
            sum -= k[static_cast<std::size_t>(j)];
            k[static_cast<std::size_t>(j)] = 0;
        }
        return false;
    }
};

struct QTerm {
    std::vector<int> expo; // x-exponents, one per variable
    int xdeg;
    Int base;              // q * 4^j * L^{j-1}, fixed before the main loop
};

} // namespace

Rat simplex_moment(int n, const std::vector<long>& k) {
    if (static_cast<int>(k.size()) != n)
        throw precondition_error("simplex_moment: exponent vector length != n");
    long w = 0;
    Rat num(1);
    for (long kc : k) {
        if (kc < 0) throw precondition_error("simplex_moment: negative exponent");
        num *= Rat(odd_double_factorial(static_cast<unsigned long>(kc)),
                   int_pow(Int(2), static_cast<unsigned long>(kc)));
        w += kc;
    }
    num.canonicalize();
    return num / rising_half(n + 1, w);
}

PeriodExpansion simplex_period(const SimplexProblem& p) {
    const int n = p.n;
    const int N = p.order;
    if (n < 1) throw precondition_error("simplex_period: dimension must be >= 1");
    if (p.P.nvars() != n + 1)
        throw precondition_error("simplex_period: P must have n+1 variables (t last)");
    if (N < 0) throw precondition_error("simplex_period: negative order");

    // constant term c = P(x=0, t=0)
    Rat c = p.P.constant_term();
    if (is_zero(c)) throw violated_nonvanishing_error();

    // Substitute x_i -> t x_i: the monomial x^e t^j acquires t-degree
    // j + |e|.  Group R = (P_sub - c)/c by t-degree, then clear denominators
    // with L so that Qt[tau] is an integer polynomial.
    Int L(1);
    for (const auto& [e, v] : p.P.terms()) {
        Rat w = v / c;
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), w.get_den().get_mpz_t());
    }
    int rQ = 0;
    std::vector<std::vector<QTerm>> Qt(static_cast<std::size_t>(N) + 1);
    for (const auto& [e, v] : p.P.terms()) {
        int64_t xdeg = 0;
        for (int j = 0; j < n; ++j) xdeg += e[static_cast<std::size_t>(j)];
        int64_t tau = xdeg + e[static_cast<std::size_t>(n)];
        if (tau == 0) continue; // the constant c itself
        if (tau > N) continue;  // cannot influence coefficients up to t^N
        Rat w = v / c;
        Int iv = w.get_num() * (L / w.get_den());
        QTerm q;
        q.expo.assign(e.begin(), e.begin() + n);
        q.xdeg = static_cast<int>(xdeg);
        q.base = std::move(iv);
        Qt[static_cast<std::size_t>(tau)].push_back(std::move(q));
        rQ = std::max<int>(rQ, static_cast<int>(tau));
    }

    // base *= 4^tau L^{tau-1}
    {
        Int four_l(1);
        Int pow4(1);
        for (int tau = 1; tau <= rQ; ++tau) {
            pow4 *= 4;
            four_l = tau == 1 ? Int(1) : four_l * L;
            for (auto& q : Qt[static_cast<std::size_t>(tau)]) q.base *= pow4 * four_l;
        }
    }

    // Sliding-window recursion for T_m = (4L)^m S_m where S = (1+R)^{-1/2}:
    //   2(i+1) T_{i+1} = - sum_{j=1..min(i+1,rQ)} (2(i+1)-j) 4^j L^{j-1} Qt[j] T_{i+1-j}
    // Every monomial of T_m has x-degree <= m, so T_m lives on the simplex of
    // degree m and the products never leave the degree-(i+1) simplex.
    std::deque<std::vector<mpz_class>> window; // T_{step-1}, T_{step-2}, ...
    {
        std::vector<mpz_class> t0(1);
        t0[0] = 1;
        window.emplace_front(std::move(t0));
    }

    // contraction bookkeeping
    std::vector<Int> odd_tab(static_cast<std::size_t>(N) + 1);
    for (long kk = 0; kk <= N; ++kk) odd_tab[static_cast<std::size_t>(kk)] = odd_double_factorial(static_cast<unsigned long>(kk));
    std::vector<Rat> moment_denom(static_cast<std::size_t>(N) + 1); // 2^w * rising((n+1)/2, w)
    {
        Rat rising(1);
        Rat base(n + 1, 2);
        base.canonicalize();
        Rat pow2(1);
        for (long w = 0; w <= N; ++w) {
            moment_denom[static_cast<std::size_t>(w)] = pow2 * rising;
            rising *= base + w;
            pow2 *= 2;
        }
    }
    Rat fourL_pow(1);
    Rat fourL = Rat(4) * Rat(L);

    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(N) + 1);

    mpz_class tmp, tmp2;
    std::vector<Int> subtotal;

    auto contract = [&](const std::vector<mpz_class>& T, int deg) -> Rat {
        subtotal.assign(static_cast<std::size_t>(deg) + 1, Int(0));
        PrefixIter pre(n, deg);
        int64_t base_rank = 0;
        do {
            int rem = deg - pre.sum;
            // prefix product of (2k_c - 1)!!
            tmp2 = 1;
            for (int j = 0; j + 1 < n; ++j) tmp2 *= odd_tab[static_cast<std::size_t>(pre.k[static_cast<std::size_t>(j)])];
            for (int kn = 0; kn <= rem; ++kn) {
                const mpz_class& v = T[static_cast<std::size_t>(base_rank + kn)];
                if (mpz_sgn(v.get_mpz_t()) == 0) continue;
                tmp = v * tmp2;
                tmp *= odd_tab[static_cast<std::size_t>(kn)];
                subtotal[static_cast<std::size_t>(pre.sum + kn)] += tmp;
            }
            base_rank += rem + 1;
        } while (pre.next());
        Rat acc(0);
        for (int w = 0; w <= deg; ++w) {
            if (is_zero(subtotal[static_cast<std::size_t>(w)])) continue;
            acc += Rat(subtotal[static_cast<std::size_t>(w)]) / moment_denom[static_cast<std::size_t>(w)];
        }
        return acc / fourL_pow;
    };

    // A_0 = 1
    coeffs.push_back(Rat(1));

    std::vector<int> out_prefix(static_cast<std::size_t>(n), 0);
    for (int step = 1; step <= N; ++step) {
        const int degOut = step;
        SimplexIndexer idxOut(n, degOut);
        std::vector<mpz_class> Tout(static_cast<std::size_t>(idxOut.size()));
        Int scal;
        for (int j = 1; j <= std::min(step, rQ); ++j) {
            const auto& terms = Qt[static_cast<std::size_t>(j)];
            if (terms.empty()) continue;
            const std::vector<mpz_class>& Tin = window[static_cast<std::size_t>(j - 1)]; // T_{step-j}
            const int degIn = step - j;
            for (const auto& q : terms) {
                scal = q.base * (2 * step - j);
                PrefixIter pre(n, degIn);
                int64_t in_base = 0;
                do {
                    int rem = degIn - pre.sum;
                    // output prefix = input prefix + q prefix
                    for (int u = 0; u + 1 < n; ++u)
                        out_prefix[static_cast<std::size_t>(u)] =
                            pre.k[static_cast<std::size_t>(u)] + q.expo[static_cast<std::size_t>(u)];
                    out_prefix[static_cast<std::size_t>(n - 1)] = q.expo[static_cast<std::size_t>(n - 1)];
                    int64_t out_base = idxOut.rank(out_prefix.data());
                    for (int kn = 0; kn <= rem; ++kn) {
                        const mpz_class& v = Tin[static_cast<std::size_t>(in_base + kn)];
                        if (mpz_sgn(v.get_mpz_t()) != 0)
                            mpz_addmul(Tout[static_cast<std::size_t>(out_base + kn)].get_mpz_t(),
                                       v.get_mpz_t(), scal.get_mpz_t());
                    }
                    in_base += rem + 1;
                } while (pre.next());
            }
        }
        // divide by -2(step)
        tmp = -2 * static_cast<long>(step);
        for (auto& v : Tout) {
            if (mpz_sgn(v.get_mpz_t()) != 0)
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), tmp.get_mpz_t());
        }
        fourL_pow *= fourL;
        coeffs.push_back(contract(Tout, degOut));
        window.emplace_front(std::move(Tout));
        while (static_cast<int>(window.size()) > rQ && static_cast<int>(window.size()) > 1)
            window.pop_back();
    }

    // Transcendental prefactor: I(0) = Gamma(1/2)^{n+1} / Gamma((n+1)/2).
    PeriodExpansion out;
    Rat gamma_rat;
    if ((n + 1) % 2 == 0) {
        int m = (n + 1) / 2;
        out.pi_power = Rat(m);
        gamma_rat = Rat(1, factorial(static_cast<unsigned long>(m - 1)));
    } else {
        int m = n / 2; // Gamma((n+1)/2) = Gamma(m + 1/2) = (2m-1)!!/2^m sqrt(pi)
        out.pi_power = Rat(n, 2);
        out.pi_power.canonicalize();
        gamma_rat = Rat(int_pow(Int(2), static_cast<unsigned long>(m)),
                        odd_double_factorial(static_cast<unsigned long>(m)));
    }
    gamma_rat.canonicalize();
    out.prefactor_square = gamma_rat * gamma_rat / c;
    auto root = rat_sqrt_exact(out.prefactor_square);
    if (root) out.prefactor = *root;
    out.series = Series<Rat>(std::move(coeffs), Rat(n - 1, 2));
    out.series.mu.canonicalize();
    return out;
}

} // namespace pfk
