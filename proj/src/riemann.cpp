#include "pfk/riemann.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pfk/errors.hpp"
#include "pfk/numberfield.hpp"

namespace pfk {

namespace {

// Indicial polynomial of sum_k bhat_k(s) (d/ds)^k at s = 0:
//   ind(lambda) = sum_k [s^{v+k}] bhat_k * lambda(lambda-1)...(lambda-k+1)
// with v = min_k (val(bhat_k) - k).
template <class F>
Poly<F> indicial_polynomial(const std::vector<Poly<F>>& bhat) {
    int v = 0;
    bool have = false;
    for (int k = 0; k < static_cast<int>(bhat.size()); ++k) {
        if (bhat[static_cast<std::size_t>(k)].is_zero_poly()) continue;
        int cand = bhat[static_cast<std::size_t>(k)].valuation() - k;
        if (!have || cand < v) {
            v = cand;
            have = true;
        }
    }
    if (!have) throw precondition_error("indicial polynomial of the zero operator");
    Poly<F> ind;
    Poly<F> ff = Poly<F>::constant(F(Rat(1)));
    for (int k = 0; k < static_cast<int>(bhat.size()); ++k) {
        if (k > 0) {
            // ff *= (lambda - (k-1))
            Poly<F> lin(std::vector<F>{F(Rat(-(k - 1))), F(Rat(1))});
            ff = ff * lin;
        }
        const Poly<F>& b = bhat[static_cast<std::size_t>(k)];
        F c = b.coeff_or_zero(v + k);
        if (!(c == F())) ind = ind + ff.scaled(c);
    }
    return ind;
}

// exponent extraction over Q: rational roots exactly, the rest via numeric
// approximations carrying the exact irreducible indicial factor
std::vector<ExponentEntry> exponents_over_Q(const PolyQ& ind) {
    std::vector<ExponentEntry> out;
    if (ind.degree() < 1) return out;
    for (const auto& [g, mult] : squarefree_decomposition(ind)) {
        for (const auto& f : factor_squarefree(g)) {
            if (f.degree() == 1) {
                ExponentEntry e;
                e.rational = true;
                e.value = -f[0] / f[1];
                for (int i = 0; i < mult; ++i) out.push_back(e);
            } else {
                auto roots = complex_roots(f);
                for (const auto& r : roots) {
                    ExponentEntry e;
                    e.rational = false;
                    e.indicial = polyq_str(f, "lambda");
                    e.approx = cplx_str(r);
                    for (int i = 0; i < mult; ++i) out.push_back(e);
                }
            }
        }
    }
    return out;
}

bool entry_less(const ExponentEntry& a, const ExponentEntry& b) {
    if (a.rational != b.rational) return a.rational;
    if (a.rational) return a.value < b.value;
    return a.approx < b.approx;
}

std::string rat_or_int(const Rat& r) { return rat_str(r); }

std::string exponent_str(const ExponentEntry& e) {
    return e.rational ? rat_or_int(e.value) : e.approx;
}

// component polynomials of an NF-coefficient polynomial
std::vector<PolyQ> nf_components(const Poly<NFElem>& p, int deg_field) {
    std::vector<std::vector<Rat>> comp(static_cast<std::size_t>(deg_field));
    for (auto& v : comp) v.assign(static_cast<std::size_t>(p.degree()) + 1, Rat(0));
    for (int i = 0; i <= p.degree(); ++i) {
        const NFElem& c = p[i];
        for (std::size_t j = 0; j < c.comps().size(); ++j)
            comp[j][static_cast<std::size_t>(i)] = c.comps()[j];
    }
    std::vector<PolyQ> out;
    for (auto& v : comp) out.emplace_back(std::move(v));
    return out;
}

} // namespace

std::string SingularPoint::label() const {
    switch (kind) {
        case Kind::Rational:
            return rat_str(value);
        case Kind::Infinity:
            return "inf";
        case Kind::Algebraic:
            return approx;
    }
    return "?";
}

std::vector<SingularPoint> singular_points(const DOperator& l) {
    std::vector<SingularPoint> out;
    PolyQ lead = l.lead();
    // strip the t^v factor; t = 0 is analyzed regardless
    int v = lead.valuation();
    if (v > 0) lead = lead.shifted_down(v);

    std::vector<Rat> rationals;
    struct Group {
        PolyQ minpoly;
        std::vector<Cplx> roots;
    };
    std::vector<Group> groups;

    for (const auto& [g, mult] : squarefree_decomposition(lead)) {
        (void)mult;
        for (const auto& f : factor_squarefree(g)) {
            if (f.degree() == 1) {
                rationals.push_back(-f[0] / f[1]);
            } else {
                groups.push_back({f, complex_roots(f)});
            }
        }
    }
    rationals.push_back(Rat(0));
    std::sort(rationals.begin(), rationals.end());
    rationals.erase(std::unique(rationals.begin(), rationals.end()), rationals.end());

    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        if (a.minpoly.degree() != b.minpoly.degree()) return a.minpoly.degree() < b.minpoly.degree();
        return polyq_primitive(a.minpoly) < polyq_primitive(b.minpoly);
    });

    for (const Rat& rv : rationals) {
        SingularPoint p;
        p.kind = SingularPoint::Kind::Rational;
        p.value = rv;
        out.push_back(std::move(p));
    }
    for (const auto& g : groups) {
        for (std::size_t j = 0; j < g.roots.size(); ++j) {
            SingularPoint p;
            p.kind = SingularPoint::Kind::Algebraic;
            p.minpoly = g.minpoly;
            p.root_index = static_cast<int>(j);
            p.approx = cplx_str(g.roots[j], 8);
            out.push_back(std::move(p));
        }
    }
    SingularPoint inf;
    inf.kind = SingularPoint::Kind::Infinity;
    out.push_back(std::move(inf));
    return out;
}

std::vector<ExponentEntry> indicial_exponents(const DOperator& l, const SingularPoint& pt) {
    const int m = l.order();
    std::vector<ExponentEntry> out;

    if (pt.kind == SingularPoint::Kind::Rational) {
        std::vector<PolyQ> bhat;
        for (const auto& b : l.b) bhat.push_back(b.shifted(pt.value));
        PolyQ ind = indicial_polynomial(bhat);
        out = exponents_over_Q(ind);
    } else if (pt.kind == SingularPoint::Kind::Infinity) {
        // theta form with t = 1/s: P~ = sum_i s^{r-i} P_i(-theta_s);
        // indicial polynomial P_r(-lambda)
        ThetaOperator p = d_to_theta(l);
        PolyQ pr = p.row_poly(p.r());
        std::vector<Rat> flipped;
        for (int j = 0; j <= pr.degree(); ++j)
            flipped.push_back(j % 2 == 0 ? pr[j] : -pr[j]);
        out = exponents_over_Q(PolyQ(std::move(flipped)));
    } else {
        // exact arithmetic in Q[alpha]/(minpoly)
        auto ctx = std::make_shared<NFCtx>();
        ctx->minpoly = make_monic(pt.minpoly);
        NFCtxPtr ctxp = ctx;
        NFElem alpha = NFElem::alpha(ctxp);
        std::vector<Poly<NFElem>> bhat;
        for (const auto& b : l.b) {
            std::vector<NFElem> c;
            for (int i = 0; i <= b.degree(); ++i) c.emplace_back(b[i]);
            bhat.push_back(Poly<NFElem>(std::move(c)).shifted(alpha));
        }
        Poly<NFElem> ind = indicial_polynomial(bhat);

        // rational roots = common rational roots of the component polynomials
        PolyQ g;
        for (const auto& comp : nf_components(ind, ctx->degree())) {
            if (comp.is_zero_poly()) continue;
            g = g.is_zero_poly() ? make_monic(comp) : poly_gcd(g, comp);
        }
        std::vector<std::pair<Rat, int>> cands =
            g.degree() >= 1 ? rational_roots(g) : std::vector<std::pair<Rat, int>>{};
        Poly<NFElem> rem = ind;
        for (const auto& [root, mult_hint] : cands) {
            (void)mult_hint;
            // peel off (lambda - root) as long as it divides exactly
            Poly<NFElem> lin(std::vector<NFElem>{NFElem(-root), NFElem(Rat(1))});
            for (;;) {
                Poly<NFElem> q, r;
                poly_divmod(rem, lin, q, r);
                if (!r.is_zero_poly()) break;
                ExponentEntry e;
                e.rational = true;
                e.value = root;
                out.push_back(e);
                rem = q;
            }
        }
        if (rem.degree() >= 1) {
            // numeric fallback: embed alpha as the point's complex root
            auto alpha_roots = complex_roots(pt.minpoly);
            const Cplx& a = alpha_roots[static_cast<std::size_t>(pt.root_index)];
            std::vector<Cplx> cc;
            for (int i = 0; i <= rem.degree(); ++i) {
                // evaluate the NF coefficient at alpha = a
                Cplx acc;
                Cplx apow(mpf_class(1, 256), mpf_class(0, 256));
                const NFElem& coef = rem[i];
                for (std::size_t j = 0; j < coef.comps().size(); ++j) {
                    mpf_class w(0, 256);
                    mpf_set_q(w.get_mpf_t(), coef.comps()[j].get_mpq_t());
                    acc = cplx_add(acc, Cplx(w * apow.re, w * apow.im));
                    apow = cplx_mul(apow, a);
                }
                cc.push_back(acc);
            }
            // describe the residual indicial factor over Q(alpha)
            std::ostringstream desc;
            desc << "indicial factor over Q(alpha), alpha root of " << polyq_str(pt.minpoly)
                 << ": degree " << rem.degree();
            for (const auto& root : complex_roots_c(std::move(cc))) {
                ExponentEntry e;
                e.rational = false;
                e.indicial = desc.str();
                e.approx = cplx_str(root);
                out.push_back(e);
            }
        }
    }

    std::sort(out.begin(), out.end(), entry_less);
    if (static_cast<int>(out.size()) < m) {
        // the operator is not regular-singular at this point; report what the
        // indicial equation gives (callers surface the count mismatch)
    }
    return out;
}

std::string classify_point(const std::vector<ExponentEntry>& exponents, int order) {
    if (static_cast<int>(exponents.size()) != order) return "other";
    for (const auto& e : exponents)
        if (!e.rational) return "other";
    std::vector<Rat> v;
    for (const auto& e : exponents) v.push_back(e.value);
    std::sort(v.begin(), v.end());

    bool all_equal = true;
    for (const auto& x : v)
        if (x != v[0]) all_equal = false;
    if (all_equal) return is_integer(v[0]) ? "MUM-candidate" : "other";

    if (order == 4) {
        std::vector<Rat> shifted;
        for (const auto& x : v) shifted.push_back(x - v[0]);
        if (shifted[0] == 0 && shifted[1] == 1 && shifted[2] == 1 && shifted[3] == 2)
            return "conifold-candidate";
    }

    bool ladder = true;
    for (int i = 0; i < order; ++i)
        if (v[static_cast<std::size_t>(i)] != i) ladder = false;
    if (ladder) return "regular";

    bool distinct_nonneg_int = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i]) || sgn(v[i]) < 0) distinct_nonneg_int = false;
        if (i > 0 && v[i] == v[i - 1]) distinct_nonneg_int = false;
    }
    if (distinct_nonneg_int) return "apparent-candidate";
    return "other";
}

RiemannSymbol riemann_symbol(const ThetaOperator& p) {
    DOperator l = theta_to_d(p);
    RiemannSymbol sym;
    sym.order = l.order();
    sym.points = singular_points(l);
    for (auto& pt : sym.points) {
        pt.exponents = indicial_exponents(l, pt);
        pt.tag = classify_point(pt.exponents, sym.order);
        if (static_cast<int>(pt.exponents.size()) != sym.order)
            pt.note = "indicial polynomial has degree " + std::to_string(pt.exponents.size()) +
                      " < operator order (not regular-singular here)";
        else if (pt.tag == "other") {
            bool all_equal = true, all_rational = true;
            for (const auto& e : pt.exponents) {
                if (!e.rational) all_rational = false;
                else if (e.value != pt.exponents[0].value) all_equal = false;
            }
            if (all_rational && all_equal && !is_integer(pt.exponents[0].value))
                pt.note = "all exponents equal " + rat_str(pt.exponents[0].value) +
                          ": MUM after a square-root cover (reported, not auto-classified)";
        }
    }
    return sym;
}

std::string RiemannSymbol::render_table() const {
    std::vector<std::vector<std::string>> cols;
    std::vector<std::string> heads;
    for (const auto& pt : points) {
        heads.push_back(pt.label());
        std::vector<std::string> col;
        for (const auto& e : pt.exponents) col.push_back(exponent_str(e));
        while (static_cast<int>(col.size()) < order) col.push_back("-");
        cols.push_back(std::move(col));
    }
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = heads[c].size();
        for (const auto& s : cols[c]) width[c] = std::max(width[c], s.size());
    }
    std::ostringstream os;
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w >= s.size() ? w - s.size() : 0, ' ') + s;
    };
    os << " ";
    for (std::size_t c = 0; c < cols.size(); ++c) os << " " << pad(heads[c], width[c]);
    os << "\n ";
    std::size_t total = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) total += width[c] + 1;
    os << std::string(total, '-') << "\n";
    for (int rrow = 0; rrow < order; ++rrow) {
        os << " ";
        for (std::size_t c = 0; c < cols.size(); ++c)
            os << " " << pad(cols[c][static_cast<std::size_t>(rrow)], width[c]);
        os << "\n";
    }
    // legend for algebraic points
    for (const auto& pt : points) {
        if (pt.kind == SingularPoint::Kind::Algebraic && pt.root_index == 0)
            os << " where " << polyq_str(pt.minpoly) << " = 0\n";
    }
    return os.str();
}

std::string RiemannSymbol::machine() const {
    std::ostringstream os;
    for (const auto& pt : points) {
        os << pt.label();
        if (pt.kind == SingularPoint::Kind::Algebraic) os << " (root of " << polyq_str(pt.minpoly) << ")";
        os << " | ";
        for (std::size_t i = 0; i < pt.exponents.size(); ++i)
            os << (i ? " " : "") << exponent_str(pt.exponents[i]);
        os << " | " << pt.tag;
        if (!pt.note.empty()) os << " | " << pt.note;
        os << "\n";
    }
    return os.str();
}

std::string RiemannSymbol::fuchs_line() const {
    Rat total(0);
    int singular = 0;
    bool complete = true;
    for (const auto& pt : points) {
        if (pt.tag == "regular") continue;
        ++singular;
        for (const auto& e : pt.exponents) {
            if (e.rational)
                total += e.value;
            else
                complete = false;
        }
    }
    const int m = order;
    Rat expected = Rat((singular - 2) * m * (m - 1), 2);
    expected.canonicalize();
    std::ostringstream os;
    os << "Fuchs diagnostic: exponent sum over " << singular << " singular points = "
       << (complete ? rat_str(total) : rat_str(total) + " (rational part only)")
       << ", (k-2)*m(m-1)/2 = " << rat_str(expected);
    return os.str();
}

std::pair<bool, std::vector<std::string>> has_mum_point(const ThetaOperator& p) {
    RiemannSymbol sym = riemann_symbol(p);
    std::vector<std::string> where;
    for (const auto& pt : sym.points)
        if (pt.tag == "MUM-candidate") where.push_back(pt.label());
    return {!where.empty(), where};
}

bool apparent_point_logfree(const ThetaOperator& p, const Rat& point, int n_terms) {
    DOperator l = theta_to_d(p);
    std::vector<PolyQ> bhat;
    for (const auto& b : l.b) bhat.push_back(b.shifted(point));
    DOperator shifted = normalize_d(std::move(bhat));
    ThetaOperator local = d_to_theta(shifted);

    PolyQ ind = local.row_poly(0);
    std::vector<std::pair<Rat, int>> rr = rational_roots(ind);
    std::vector<long> expos;
    for (const auto& [root, mult] : rr) {
        if (mult != 1 || !is_integer(root) || sgn(root) < 0) return false;
        expos.push_back(root.get_num().get_si());
    }
    if (static_cast<int>(expos.size()) != local.d()) return false;

    // attempt a log-free solution s^{e}(1 + ...) for every indicial root
    for (long e : expos) {
        std::vector<Rat> a(static_cast<std::size_t>(n_terms) + 1, Rat(0));
        a[0] = 1;
        for (int n = 1; n <= n_terms; ++n) {
            Rat rhs(0);
            for (int i = 1; i <= std::min(local.r(), n); ++i)
                rhs += local.eval_row(i, Rat(n - i + e)) * a[static_cast<std::size_t>(n - i)];
            Rat p0 = local.eval_row(0, Rat(n + e));
            if (is_zero(p0)) {
                if (!is_zero(rhs)) return false; // obstruction: a log is forced
                a[static_cast<std::size_t>(n)] = 0;
            } else {
                a[static_cast<std::size_t>(n)] = -rhs / p0;
            }
        }
    }
    return true;
}

} // namespace pfk
