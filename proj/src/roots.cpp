#include "pfk/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "pfk/errors.hpp"

namespace pfk {

Cplx cplx_add(const Cplx& a, const Cplx& b) { return Cplx(a.re + b.re, a.im + b.im); }
Cplx cplx_sub(const Cplx& a, const Cplx& b) { return Cplx(a.re - b.re, a.im - b.im); }
Cplx cplx_mul(const Cplx& a, const Cplx& b) {
    return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
mpf_class cplx_abs2(const Cplx& a) { return a.re * a.re + a.im * a.im; }
Cplx cplx_div(const Cplx& a, const Cplx& b) {
    mpf_class n = cplx_abs2(b);
    if (sgn(n) == 0) throw precondition_error("complex division by zero");
    return Cplx((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

std::string cplx_str(const Cplx& a, int digits) {
    auto fmt = [digits](const mpf_class& x) {
        char buf[256];
        gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, x.get_mpf_t());
        return std::string(buf);
    };
    // treat tiny imaginary part as an artifact of the iteration
    mpf_class tol(1, 64);
    tol = 1;
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 100);
    mpf_class scale = abs(a.re) + abs(a.im) + 1;
    if (abs(a.im) < tol * scale) return fmt(a.re);
    std::string s = fmt(a.re);
    if (sgn(a.im) >= 0)
        s += " + " + fmt(a.im) + "*i";
    else
        s += " - " + fmt(mpf_class(-a.im)) + "*i";
    return s;
}

std::vector<Cplx> complex_roots_c(std::vector<Cplx> coeffs, long prec_bits) {
    while (coeffs.size() > 1 && sgn(cplx_abs2(coeffs.back())) == 0) coeffs.pop_back();
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n <= 0) return {};

    // monicize
    Cplx lead = coeffs.back();
    for (auto& c : coeffs) c = cplx_div(c, lead);

    // Cauchy radius bound
    mpf_class radius(1, prec_bits);
    for (int i = 0; i < n; ++i) {
        mpf_class m = sqrt(cplx_abs2(coeffs[static_cast<std::size_t>(i)]));
        if (m > radius) radius = m;
    }
    radius = radius + 1;

    std::vector<Cplx> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * 3.14159265358979323846 * k / n + 0.39;
        mpf_class re(std::cos(ang), prec_bits), im(std::sin(ang), prec_bits);
        r[static_cast<std::size_t>(k)] = Cplx(re * radius, im * radius);
    }

    auto eval = [&](const Cplx& x) {
        Cplx acc(mpf_class(0, prec_bits), mpf_class(0, prec_bits));
        for (int i = n; i >= 0; --i) acc = cplx_add(cplx_mul(acc, x), coeffs[static_cast<std::size_t>(i)]);
        return acc;
    };

    mpf_class thresh(1, prec_bits);
    mpf_div_2exp(thresh.get_mpf_t(), thresh.get_mpf_t(), static_cast<unsigned long>(prec_bits - 24));

    for (int iter = 0; iter < 1000; ++iter) {
        mpf_class max_step(0, prec_bits);
        for (int k = 0; k < n; ++k) {
            Cplx denom(mpf_class(1, prec_bits), mpf_class(0, prec_bits));
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                denom = cplx_mul(denom, cplx_sub(r[static_cast<std::size_t>(k)], r[static_cast<std::size_t>(j)]));
            }
            Cplx step = cplx_div(eval(r[static_cast<std::size_t>(k)]), denom);
            r[static_cast<std::size_t>(k)] = cplx_sub(r[static_cast<std::size_t>(k)], step);
            mpf_class s = sqrt(cplx_abs2(step));
            if (s > max_step) max_step = s;
        }
        if (max_step < thresh * radius) break;
    }

    std::sort(r.begin(), r.end(), [](const Cplx& a, const Cplx& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return r;
}

std::vector<Cplx> complex_roots(const PolyQ& p, long prec_bits) {
    std::vector<Cplx> coeffs;
    for (int i = 0; i <= p.degree(); ++i) {
        mpf_class re(0, prec_bits);
        mpf_set_q(re.get_mpf_t(), p[i].get_mpq_t());
        coeffs.emplace_back(re, mpf_class(0, prec_bits));
    }
    return complex_roots_c(std::move(coeffs), prec_bits);
}

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() < 1) return out;
    PolyQ a = make_monic(p);
    PolyQ g = poly_gcd(a, a.derivative());
    PolyQ w, rdummy;
    poly_divmod(a, g, w, rdummy);
    int i = 1;
    while (w.degree() > 0) {
        PolyQ y = poly_gcd(w, g);
        PolyQ z, r2;
        poly_divmod(w, y, z, r2);
        if (z.degree() > 0) out.emplace_back(make_monic(z), i);
        PolyQ gq;
        poly_divmod(g, y, gq, r2);
        g = gq;
        w = y;
        ++i;
    }
    return out;
}

namespace {

// round lead * prod_{i in subset} (x - root_i) to an integer polynomial;
// returns false when some coefficient is not close to an integer
bool reconstruct_candidate(const std::vector<Cplx>& roots, const std::vector<int>& subset,
                           const Int& lead, std::vector<Int>& out) {
    const long prec = 256;
    std::vector<Cplx> c;
    c.emplace_back(mpf_class(1, prec), mpf_class(0, prec));
    for (int idx : subset) {
        // multiply by (x - r)
        c.emplace_back(mpf_class(0, prec), mpf_class(0, prec));
        for (std::size_t i = c.size() - 1; i > 0; --i) {
            c[i] = cplx_add(c[i - 1], cplx_mul(c[i], Cplx(mpf_class(-roots[static_cast<std::size_t>(idx)].re),
                                                          mpf_class(-roots[static_cast<std::size_t>(idx)].im))));
        }
        c[0] = cplx_mul(c[0], Cplx(mpf_class(-roots[static_cast<std::size_t>(idx)].re),
                                   mpf_class(-roots[static_cast<std::size_t>(idx)].im)));
    }
    mpf_class lead_f(0, prec);
    mpf_set_z(lead_f.get_mpf_t(), lead.get_mpz_t());
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 80);
    out.clear();
    for (auto& coef : c) {
        mpf_class re = coef.re * lead_f;
        mpf_class im = coef.im * lead_f;
        mpf_class scale = abs(re) + 1;
        if (abs(im) > tol * scale) return false;
        // nearest integer
        mpf_class shifted = re + (sgn(re) >= 0 ? mpf_class(0.5, prec) : mpf_class(-0.5, prec));
        Int z;
        mpz_set_f(z.get_mpz_t(), shifted.get_mpf_t());
        mpf_class zf(0, prec);
        mpf_set_z(zf.get_mpf_t(), z.get_mpz_t());
        mpf_class err = abs(re - zf);
        if (err > tol * scale) return false;
        out.push_back(std::move(z));
    }
    return true;
}

bool exact_divides(const PolyQ& p, const PolyQ& f, PolyQ& quotient) {
    PolyQ q, r;
    poly_divmod(p, f, q, r);
    if (!r.is_zero_poly()) return false;
    quotient = q;
    return true;
}

void enumerate_subsets(int n, int size, std::vector<int>& cur, int start,
                       const std::function<bool(const std::vector<int>&)>& cb, bool& stop) {
    if (stop) return;
    if (static_cast<int>(cur.size()) == size) {
        if (cb(cur)) stop = true;
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        enumerate_subsets(n, size, cur, i + 1, cb, stop);
        cur.pop_back();
        if (stop) return;
    }
}

} // namespace

std::vector<PolyQ> factor_squarefree(const PolyQ& p) {
    std::vector<PolyQ> out;
    if (p.degree() < 1) return out;
    std::vector<Int> prim = polyq_primitive(p);
    PolyQ work = polyq_from_int(prim);
    std::vector<Cplx> roots = complex_roots(work);
    std::vector<int> alive(roots.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);

    while (work.degree() > 0) {
        const int nr = static_cast<int>(alive.size());
        Int lead = work.lead().get_num(); // primitive integer poly: denominator 1
        bool found = false;
        PolyQ factor, quotient;
        std::vector<int> used_subset;
        for (int size = 1; size <= nr / 2 && !found; ++size) {
            std::vector<int> cur;
            bool stop = false;
            enumerate_subsets(nr, size, cur, 0,
                              [&](const std::vector<int>& subset) {
                                  std::vector<int> idx;
                                  for (int s : subset) idx.push_back(alive[static_cast<std::size_t>(s)]);
                                  std::vector<Int> cand;
                                  if (!reconstruct_candidate(roots, idx, lead, cand)) return false;
                                  PolyQ candf = polyq_from_int(polyq_primitive(polyq_from_int(cand)));
                                  if (candf.degree() < 1) return false;
                                  PolyQ q;
                                  if (!exact_divides(work, candf, q)) return false;
                                  factor = candf;
                                  quotient = q;
                                  used_subset = subset;
                                  return true;
                              },
                              stop);
            found = stop;
        }
        if (!found) {
            // irreducible remainder
            out.push_back(polyq_from_int(polyq_primitive(work)));
            break;
        }
        out.push_back(factor);
        work = quotient;
        // drop used roots
        std::vector<int> next;
        std::size_t u = 0;
        for (int s = 0; s < nr; ++s) {
            if (u < used_subset.size() && used_subset[u] == s) {
                ++u;
                continue;
            }
            next.push_back(alive[static_cast<std::size_t>(s)]);
        }
        alive = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const PolyQ& a, const PolyQ& b) {
        return a.degree() < b.degree();
    });
    return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const PolyQ& p, PolyQ* cofactor) {
    std::vector<std::pair<Rat, int>> out;
    PolyQ co = make_monic(p);
    if (p.degree() < 1) {
        if (cofactor) *cofactor = co;
        return out;
    }
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        for (const auto& f : factor_squarefree(g)) {
            if (f.degree() != 1) continue;
            Rat root = -f[0] / f[1];
            out.emplace_back(root, mult);
            PolyQ lin(std::vector<Rat>{-root, Rat(1)});
            for (int k = 0; k < mult; ++k) {
                PolyQ q, r;
                poly_divmod(co, lin, q, r);
                if (!r.is_zero_poly()) throw precondition_error("rational_roots: internal division bug");
                co = q;
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    if (cofactor) *cofactor = make_monic(co);
    return out;
}

} // namespace pfk
