#include <algorithm>

#include "pfk/errors.hpp"
#include "pfk/periods.hpp"

namespace pfk {

namespace {

using QPoly = MultiPoly<QuadExt>;

QPoly to_quad(const PolyRat& p) {
    QPoly r(p.nvars());
    for (const auto& [e, v] : p.terms()) r.add_term(e, QuadExt(v));
    return r;
}

// Determinant of a small polynomial matrix by Laplace expansion along the
// first row, all products truncated at total degree cap.
QPoly det_capped(const std::vector<std::vector<QPoly>>& m, std::vector<int> cols, int row,
                 int nvars, int64_t cap) {
    if (cols.empty()) return QPoly::constant(nvars, QuadExt(Rat(1)));
    QPoly acc(nvars);
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const QPoly& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[ci])];
        if (entry.is_zero_poly()) continue;
        std::vector<int> sub;
        for (std::size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) sub.push_back(cols[cj]);
        QPoly minor = det_capped(m, std::move(sub), row + 1, nvars, cap);
        QPoly term = QPoly::mul_capped(entry, minor, cap);
        acc = (ci % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Symmetric Gauss (Lagrange) congruence diagonalization of the quadratic form
// f2 over Q: returns an invertible rational matrix M and diagonal values c
// with f2(M y) = sum c_i y_i^2.
void diagonalize_quadratic(const PolyRat& f2, int n, std::vector<std::vector<Rat>>& M,
                           std::vector<Rat>& diag) {
    // Gram matrix
    std::vector<std::vector<Rat>> G(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (const auto& [e, v] : f2.terms()) {
        int i = -1, j = -1;
        for (int c = 0; c < n; ++c) {
            for (int32_t k = 0; k < e[static_cast<std::size_t>(c)]; ++k) {
                if (i < 0)
                    i = c;
                else
                    j = c;
            }
        }
        if (j < 0) j = i;
        if (i == j) {
            G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        } else {
            G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v / 2;
            G[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v / 2;
        }
    }

    // E accumulates the congruence transform; the final M satisfies
    // M^T G M = diag.
    M.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

    auto col_op = [&](int dst, int src, const Rat& factor) {
        // column dst += factor * column src (and the symmetric row op on G)
        for (int r = 0; r < n; ++r)
            G[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] +=
                factor * G[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
        for (int cidx = 0; cidx < n; ++cidx)
            G[static_cast<std::size_t>(dst)][static_cast<std::size_t>(cidx)] +=
                factor * G[static_cast<std::size_t>(src)][static_cast<std::size_t>(cidx)];
        for (int r = 0; r < n; ++r)
            M[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] +=
                factor * M[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
    };
    auto col_swap = [&](int a, int b) {
        for (int r = 0; r < n; ++r)
            std::swap(G[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                      G[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
        for (int cidx = 0; cidx < n; ++cidx)
            std::swap(G[static_cast<std::size_t>(a)][static_cast<std::size_t>(cidx)],
                      G[static_cast<std::size_t>(b)][static_cast<std::size_t>(cidx)]);
        for (int r = 0; r < n; ++r)
            std::swap(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
    };

    for (int i = 0; i < n; ++i) {
        if (is_zero(G[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])) {
            int swap_j = -1, mix_j = -1;
            for (int j = i + 1; j < n; ++j) {
                if (!is_zero(G[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]) && swap_j < 0)
                    swap_j = j;
                if (!is_zero(G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) && mix_j < 0)
                    mix_j = j;
            }
            if (swap_j >= 0) {
                col_swap(i, swap_j);
            } else if (mix_j >= 0) {
                col_op(i, mix_j, Rat(1)); // creates 2*G[i][mix_j] on the diagonal
            } else {
                throw degenerate_quadratic_error();
            }
        }
        const Rat pivot = G[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const Rat& gij = G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!is_zero(gij)) col_op(j, i, -gij / pivot);
        }
    }

    diag.clear();
    for (int i = 0; i < n; ++i) {
        const Rat& ci = G[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        if (is_zero(ci)) throw degenerate_quadratic_error();
        diag.push_back(ci);
    }
}

PolyRat apply_linear(const PolyRat& p, const std::vector<std::vector<Rat>>& M, int n) {
    std::vector<PolyRat> images;
    for (int i = 0; i < n; ++i) {
        PolyRat img(n);
        for (int j = 0; j < n; ++j) {
            Expo e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = 1;
            img.add_term(e, M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        images.push_back(std::move(img));
    }
    return p.substituted(images, -1);
}

Rat det_rat(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    Rat det(1);
    for (int i = 0; i < n; ++i) {
        int piv = -1;
        for (int r = i; r < n; ++r)
            if (!is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)])) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != i) {
            std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(i)]);
            det = -det;
        }
        det *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        for (int r = i + 1; r < n; ++r) {
            Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] /
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
            if (is_zero(f)) continue;
            for (int c = i; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        }
    }
    return det;
}

} // namespace

Rat ball_moment(int n, const std::vector<long>& k) {
    if (static_cast<int>(k.size()) != n)
        throw precondition_error("ball_moment: exponent vector length != n");
    Rat num(1);
    long w = 0;
    for (long kc : k) {
        if (kc < 0) throw precondition_error("ball_moment: negative exponent");
        // (2k)!/(4^k k!) = (2k-1)!!/2^k
        num *= Rat(odd_double_factorial(static_cast<unsigned long>(kc)),
                   int_pow(Int(2), static_cast<unsigned long>(kc)));
        w += kc;
    }
    num.canonicalize();
    Rat den(1);
    Rat half_n(n, 2);
    half_n.canonicalize();
    for (long i = 1; i <= w; ++i) den *= half_n + i;
    return num / den;
}

MorseNormalization morse_normalize(const MorseProblem& p, int working_degree) {
    const int n = p.n;
    if (n < 1) throw precondition_error("morse_normalize: dimension must be >= 1");
    if (p.f.nvars() != n || p.A.nvars() != n)
        throw precondition_error("morse_normalize: f and A must have exactly n variables");

    const int D = working_degree > 0 ? working_degree : 2 * p.order + n + 2;

    if (!is_zero(p.f.constant_term()))
        throw precondition_error("morse_normalize: f has a constant term");
    if (!p.f.homogeneous_part(1).is_zero_poly())
        throw precondition_error("morse_normalize: f has a linear part");

    // (a) rational congruence diagonalization of f_2
    PolyRat f2 = p.f.homogeneous_part(2);
    std::vector<std::vector<Rat>> M;
    std::vector<Rat> diag;
    diagonalize_quadratic(f2, n, M, diag);

    PolyRat f_y = apply_linear(p.f, M, n).truncated(D);
    PolyRat A_y = apply_linear(p.A, M, n).scaled(det_rat(M)).truncated(D);

    // rescale y_i = x_i / sqrt(c_i); perfect rational squares stay rational,
    // the rest adjoin a symbol s_i with s_i^2 = c_i
    auto ctx = std::make_shared<QuadCtx>();
    std::vector<int> sym_index(static_cast<std::size_t>(n), -1);
    std::vector<Rat> rat_root(static_cast<std::size_t>(n), Rat(1));
    for (int i = 0; i < n; ++i) {
        auto root = rat_sqrt_exact(diag[static_cast<std::size_t>(i)]);
        if (root) {
            rat_root[static_cast<std::size_t>(i)] = *root;
        } else {
            sym_index[static_cast<std::size_t>(i)] = static_cast<int>(ctx->squares.size());
            ctx->squares.push_back(diag[static_cast<std::size_t>(i)]);
        }
    }
    QuadCtxPtr ctxp = ctx;
    const std::size_t comps = std::size_t(1) << ctx->squares.size();

    // multiplies v by prod_i (1/sqrt(c_i))^{e_i}
    auto rescale_coeff = [&](const Rat& v, const Expo& e) {
        std::vector<Rat> comp(comps, Rat(0));
        Rat plain = v;
        std::size_t mask = 0;
        for (int i = 0; i < n; ++i) {
            int32_t k = e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            if (sym_index[static_cast<std::size_t>(i)] < 0) {
                plain /= rat_pow(rat_root[static_cast<std::size_t>(i)], k);
            } else {
                // (1/s)^k = s^{k mod 2} / c^{ceil(k/2)}
                const Rat& c = diag[static_cast<std::size_t>(i)];
                plain /= rat_pow(c, k / 2);
                if (k % 2 != 0) {
                    plain /= c;
                    mask ^= std::size_t(1) << sym_index[static_cast<std::size_t>(i)];
                }
            }
        }
        comp[mask] = plain;
        return QuadExt(ctxp, std::move(comp));
    };

    QPoly f(n), omega(n);
    for (const auto& [e, v] : f_y.terms()) f.add_term(e, rescale_coeff(v, e));
    // the measure itself contributes prod 1/sqrt(c_i): fold into omega with A
    QuadExt dscale(ctxp, std::vector<Rat>(comps, Rat(0)));
    {
        std::vector<Rat> comp(comps, Rat(0));
        Rat plain(1);
        std::size_t mask = 0;
        for (int i = 0; i < n; ++i) {
            if (sym_index[static_cast<std::size_t>(i)] < 0) {
                plain /= rat_root[static_cast<std::size_t>(i)];
            } else {
                plain /= diag[static_cast<std::size_t>(i)];
                mask ^= std::size_t(1) << sym_index[static_cast<std::size_t>(i)];
            }
        }
        comp[mask] = plain;
        dscale = QuadExt(ctxp, std::move(comp));
    }
    for (const auto& [e, v] : A_y.terms()) omega.add_term(e, rescale_coeff(v, e) * dscale);

    // (b) kill the lowest non-quadratic homogeneous part, repeatedly
    for (;;) {
        int64_t k = -1;
        for (int64_t deg = 3; deg <= D; ++deg) {
            if (!f.homogeneous_part(deg).is_zero_poly()) {
                k = deg;
                break;
            }
        }
        if (k < 0) break;
        QPoly fk = f.homogeneous_part(k);
        // assign each monomial to its smallest-index dividing variable
        std::vector<QPoly> a(static_cast<std::size_t>(n), QPoly(n));
        for (const auto& [e, v] : fk.terms()) {
            int i = 0;
            while (e[static_cast<std::size_t>(i)] == 0) ++i;
            Expo ne = e;
            ne[static_cast<std::size_t>(i)] -= 1;
            a[static_cast<std::size_t>(i)].add_term(ne, scale_by_rat(v, Rat(1, 2)));
        }
        // substitution x_i -> x_i - a_i
        std::vector<QPoly> images;
        for (int i = 0; i < n; ++i)
            images.push_back(QPoly::variable(n, i) - a[static_cast<std::size_t>(i)]);
        f = f.substituted(images, D);
        // omega -> omega(x - a) * det(I - Da)
        std::vector<std::vector<QPoly>> jac(static_cast<std::size_t>(n),
                                            std::vector<QPoly>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                QPoly entry = -a[static_cast<std::size_t>(i)].derivative(j);
                if (i == j) entry = entry + QPoly::constant(n, QuadExt(Rat(1)));
                jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(entry);
            }
        std::vector<int> cols;
        for (int i = 0; i < n; ++i) cols.push_back(i);
        QPoly jdet = det_capped(jac, cols, 0, n, D);
        omega = QPoly::mul_capped(omega.substituted(images, D), jdet, D);
    }

    MorseNormalization out;
    out.ctx = ctxp;
    out.g = f;
    out.omega = omega;
    out.d = dscale;
    out.diagonal = diag;
    out.working_degree = D;
    return out;
}

PeriodExpansion morse_period(const MorseProblem& p) {
    const int n = p.n;
    const int N = p.order;
    MorseNormalization nf = morse_normalize(p);

    // all even-exponent coefficients must live on the all-symbols component
    const std::size_t full_mask = (std::size_t(1) << nf.ctx->squares.size()) - 1;

    std::vector<Rat> R(static_cast<std::size_t>(N) + 1, Rat(0));
    std::vector<long> kvec(static_cast<std::size_t>(n), 0);
    for (const auto& [e, v] : nf.omega.terms()) {
        bool even = true;
        long w = 0;
        for (int i = 0; i < n && even; ++i) {
            if (e[static_cast<std::size_t>(i)] % 2 != 0) even = false;
            kvec[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] / 2;
            w += kvec[static_cast<std::size_t>(i)];
        }
        if (!even) continue; // odd moments vanish over the ball
        if (w > N) continue;
        for (std::size_t m = 0; m < v.comps().size(); ++m) {
            if (m != full_mask && !is_zero(v.comps()[m]))
                throw irrational_coefficient_error(
                    "even-moment coefficient has a stray extension component");
        }
        R[static_cast<std::size_t>(w)] += v.component(full_mask) * ball_moment(n, kvec);
    }

    if (is_zero(R[0]))
        throw precondition_error("morse_period: leading moment vanishes (A(0) = 0?)");

    // phi = d/dt of t^{n/2} sum R_m t^m: multiply R_m by (m + n/2), offset
    // drops to n/2 - 1, then normalize to leading coefficient 1.
    Rat half_n(n, 2);
    half_n.canonicalize();
    std::vector<Rat> coeffs(static_cast<std::size_t>(N) + 1);
    for (int m = 0; m <= N; ++m)
        coeffs[static_cast<std::size_t>(m)] =
            (half_n + m) * R[static_cast<std::size_t>(m)] / (half_n * R[0]);

    // I(0) = Gamma(1/2)^n / Gamma(n/2+1)
    Rat gamma_rat;
    Rat pi_power;
    if (n % 2 == 0) {
        int m = n / 2;
        pi_power = Rat(m);
        gamma_rat = Rat(1, factorial(static_cast<unsigned long>(m)));
    } else {
        int m = (n - 1) / 2; // Gamma(n/2+1) = (2m+1)!!/2^{m+1} sqrt(pi), n = 2m+1
        pi_power = Rat(m);
        gamma_rat = Rat(int_pow(Int(2), static_cast<unsigned long>(m + 1)),
                        odd_double_factorial(static_cast<unsigned long>(m + 1)));
    }
    gamma_rat.canonicalize();

    PeriodExpansion out;
    out.pi_power = pi_power;
    Rat lead = R[0] * half_n * gamma_rat; // rational part; the sqrt part is prod sqrt(c_i)^-1... squared below
    Rat sym_product(1);
    for (const Rat& c : nf.ctx->squares) sym_product *= c;
    // full prefactor = lead * prod_{symbols} sqrt(c_i)  (the 1/c_i are already in lead via d)
    out.prefactor_square = lead * lead * sym_product;
    auto root = rat_sqrt_exact(out.prefactor_square);
    if (root) out.prefactor = *root;
    Rat mu = half_n - 1;
    out.series = Series<Rat>(std::move(coeffs), mu);
    return out;
}

} // namespace pfk
