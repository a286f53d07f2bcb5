#pragma once

#include <algorithm>
#include <vector>

#include "pfk/errors.hpp"
#include "pfk/rational.hpp"

namespace pfk {

// Truncated power series  t^mu * (c[0] + c[1] t + ... + c[N] t^N + O(t^{N+1}))
// over an exact coefficient ring R.  The offset mu is a rational exponent so
// half-integer conifold expansions are first class.  Every operation returns
// a fresh value; nothing is mutated in place.
template <class R>
struct Series {
    Rat mu;             // exponent offset
    std::vector<R> c;   // c[0..N]

    Series() : mu(0), c(1, R()) {}
    explicit Series(std::vector<R> coeffs, Rat offset = Rat(0))
        : mu(std::move(offset)), c(std::move(coeffs)) {
        if (c.empty()) throw precondition_error("series needs at least one coefficient");
    }

    int order() const { return static_cast<int>(c.size()) - 1; }

    static Series constant(const R& v, int n) {
        std::vector<R> cc(static_cast<std::size_t>(n) + 1, R());
        cc[0] = v;
        return Series(std::move(cc));
    }

    const R& at(int i) const { return c[static_cast<std::size_t>(i)]; }
};

template <class R>
bool operator==(const Series<R>& a, const Series<R>& b) {
    return a.mu == b.mu && a.c == b.c;
}

template <class R>
Series<R> series_truncate(const Series<R>& a, int n) {
    if (n >= a.order()) return a;
    std::vector<R> cc(a.c.begin(), a.c.begin() + n + 1);
    return Series<R>(std::move(cc), a.mu);
}

template <class R>
Series<R> series_neg(const Series<R>& a) {
    Series<R> r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

// Addition requires the two offsets to differ by an integer; the result uses
// the smaller offset and the tightest truncation implied by the operands.
template <class R>
Series<R> series_add(const Series<R>& a, const Series<R>& b) {
    Rat diff = a.mu - b.mu;
    if (!is_integer(diff))
        throw precondition_error("series offsets differ by a non-integer: cannot add");
    long shift_a = 0, shift_b = 0; // index shifts after aligning to min offset
    Rat mu = a.mu;
    if (sgn(diff) > 0) {
        mu = b.mu;
        shift_a = diff.get_num().get_si();
    } else if (sgn(diff) < 0) {
        Rat neg = -diff;
        shift_b = neg.get_num().get_si();
    }
    long na = shift_a + a.order(), nb = shift_b + b.order();
    long n = std::min(na, nb);
    if (n < 0) throw precondition_error("series_add: no overlapping truncation range");
    std::vector<R> cc(static_cast<std::size_t>(n) + 1, R());
    for (long i = 0; i <= n; ++i) {
        R v{};
        long ia = i - shift_a, ib = i - shift_b;
        if (ia >= 0 && ia <= a.order()) v = v + a.c[static_cast<std::size_t>(ia)];
        if (ib >= 0 && ib <= b.order()) v = v + b.c[static_cast<std::size_t>(ib)];
        cc[static_cast<std::size_t>(i)] = v;
    }
    return Series<R>(std::move(cc), mu);
}

template <class R>
Series<R> series_sub(const Series<R>& a, const Series<R>& b) {
    return series_add(a, series_neg(b));
}

// Offsets add, coefficients convolve, truncation = min of operand orders.
template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
    int n = std::min(a.order(), b.order());
    std::vector<R> cc(static_cast<std::size_t>(n) + 1, R());
    for (int i = 0; i <= std::min(n, a.order()); ++i) {
        if (a.c[static_cast<std::size_t>(i)] == R()) continue;
        int jmax = std::min(n - i, b.order());
        for (int j = 0; j <= jmax; ++j) {
            cc[static_cast<std::size_t>(i + j)] =
                cc[static_cast<std::size_t>(i + j)] +
                a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
        }
    }
    return Series<R>(std::move(cc), a.mu + b.mu);
}

template <class R>
Series<R> series_scale(const Series<R>& a, const R& s) {
    Series<R> r = a;
    for (auto& v : r.c) v = v * s;
    return r;
}

// Multiplicative inverse of a series whose leading coefficient is a unit.
template <class R>
Series<R> series_inv(const Series<R>& a) {
    if (a.c[0] == R()) throw zero_leading_error();
    int n = a.order();
    std::vector<R> b(static_cast<std::size_t>(n) + 1, R());
    R inv0 = ring_inverse(a.c[0]);
    b[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        R acc{};
        for (int j = 1; j <= k; ++j)
            acc = acc + a.c[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -(inv0 * acc);
    }
    return Series<R>(std::move(b), -a.mu);
}

template <class R>
Series<R> series_div(const Series<R>& a, const Series<R>& b) {
    return series_mul(a, series_inv(b));
}

// b with b^2 * a = 1 + O(t^{N+1}) and b0 = 1/s where a0 = s^2, s > 0.
inline Series<Rat> series_inv_sqrt(const Series<Rat>& a) {
    if (!is_zero(a.mu))
        throw precondition_error("series_inv_sqrt requires offset 0");
    if (is_zero(a.c[0])) throw zero_leading_error();
    auto s = rat_sqrt_exact(a.c[0]);
    if (!s || is_zero(*s))
        throw non_square_leading_error("leading coefficient " + rat_str(a.c[0]) +
                                       " is not a positive rational square");
    int n = a.order();
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
    b[0] = Rat(1) / *s;
    // sum_{i+j+k=m} b_i b_j a_k = [m=0]; isolate the two i=m / j=m terms.
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j <= m - i; ++j) {
                if (j == m) continue;
                int k = m - i - j;
                acc += b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] *
                       a.c[static_cast<std::size_t>(k)];
            }
        }
        b[static_cast<std::size_t>(m)] = -acc / (2 * b[0] * a.c[0]);
    }
    return Series<Rat>(std::move(b), Rat(0));
}

// log(a) for a = 1 + ...; result has zero constant term.
inline Series<Rat> series_log1p(const Series<Rat>& a) {
    if (!is_zero(a.mu) || a.c[0] != 1)
        throw bad_leading_error("series_log1p requires offset 0 and leading coefficient 1");
    int n = a.order();
    std::vector<Rat> l(static_cast<std::size_t>(n) + 1, Rat(0));
    // a l' = a'  =>  m a_m = sum_{k=1..m} k l_k a_{m-k}
    for (int m = 1; m <= n; ++m) {
        Rat acc = Rat(m) * a.c[static_cast<std::size_t>(m)];
        for (int k = 1; k < m; ++k)
            acc -= Rat(k) * l[static_cast<std::size_t>(k)] * a.c[static_cast<std::size_t>(m - k)];
        l[static_cast<std::size_t>(m)] = acc / Rat(m);
    }
    return Series<Rat>(std::move(l), Rat(0));
}

// exp(a) for a with zero constant term.
inline Series<Rat> series_exp(const Series<Rat>& a) {
    if (!is_zero(a.mu) || !is_zero(a.c[0]))
        throw bad_leading_error("series_exp requires offset 0 and zero constant term");
    int n = a.order();
    std::vector<Rat> e(static_cast<std::size_t>(n) + 1, Rat(0));
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        for (int k = 1; k <= m; ++k)
            acc += Rat(k) * a.c[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(m - k)];
        e[static_cast<std::size_t>(m)] = acc / Rat(m);
    }
    return Series<Rat>(std::move(e), Rat(0));
}

// Composition a(b(t)) for inner b with zero constant term (offsets 0).
inline Series<Rat> series_compose(const Series<Rat>& a, const Series<Rat>& b) {
    if (!is_zero(b.mu) || !is_zero(b.c[0]))
        throw precondition_error("series_compose requires inner series with zero constant term");
    int n = std::min(a.order(), b.order());
    Series<Rat> res = Series<Rat>::constant(Rat(0), n);
    Series<Rat> bt = series_truncate(b, n);
    for (int k = a.order(); k >= 0; --k) {
        res = series_mul(res, bt);
        res.c[0] += a.c[static_cast<std::size_t>(k)];
    }
    res.mu = a.mu;
    return res;
}

// Compositional inverse of a = a1 t + ... (a1 != 0, offset 0):
// returns b with a(b(q)) = q + O(q^{N+1}).
inline Series<Rat> series_reversion(const Series<Rat>& a) {
    if (!is_zero(a.mu) || !is_zero(a.c[0]) || a.order() < 1 || is_zero(a.c[1]))
        throw bad_leading_error("series_reversion requires the form a1*t + ... with a1 != 0");
    int n = a.order();
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
    b[1] = Rat(1) / a.c[1];
    for (int m = 2; m <= n; ++m) {
        // impose [q^m] a(b(q)) = 0; only the a1 term involves the unknown b_m
        Series<Rat> btrunc(std::vector<Rat>(b.begin(), b.begin() + m + 1), Rat(0));
        Series<Rat> comp = series_compose(series_truncate(a, m), btrunc);
        b[static_cast<std::size_t>(m)] = -comp.c[static_cast<std::size_t>(m)] / a.c[1];
    }
    return Series<Rat>(std::move(b), Rat(0));
}

// theta = t d/dt: multiplies the t^{n+mu} coefficient by (n + mu).
template <class R>
Series<R> theta_derivative(const Series<R>& a) {
    Series<R> r = a;
    for (int i = 0; i <= r.order(); ++i)
        r.c[static_cast<std::size_t>(i)] =
            scale_by_rat(r.c[static_cast<std::size_t>(i)], Rat(i) + a.mu);
    return r;
}

} // namespace pfk
