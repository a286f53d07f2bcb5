#include "pfk/mirror.hpp"

#include <sstream>

#include "pfk/epsilon_jet.hpp"
#include "pfk/errors.hpp"

namespace pfk {

FrobeniusBasis frobenius_solutions(const ThetaOperator& p, int N) {
    const int m = p.d();
    // MUM at 0: P_0 = c * theta^m exactly
    for (int j = 0; j < m; ++j)
        if (!is_zero(p.coeff(0, j)))
            throw not_mum_error("P_0(theta) != c*theta^" + std::to_string(m) +
                                ": operator has no MUM-point at 0");
    if (is_zero(p.coeff(0, m))) throw not_mum_error("P_0 vanishes identically");

    std::vector<EpsilonJet> A;
    A.reserve(static_cast<std::size_t>(N) + 1);
    A.push_back(EpsilonJet(m, Rat(1)));
    for (int n = 1; n <= N; ++n) {
        EpsilonJet rhs(m);
        for (int i = 1; i <= std::min(p.r(), n); ++i) {
            EpsilonJet arg = EpsilonJet::shifted_eps(m, Rat(n - i));
            rhs = rhs + p.eval_row(i, arg) * A[static_cast<std::size_t>(n - i)];
        }
        EpsilonJet p0 = p.eval_row(0, EpsilonJet::shifted_eps(m, Rat(n)));
        A.push_back(-(ring_inverse(p0) * rhs));
    }

    FrobeniusBasis out;
    out.order = m;
    for (int j = 0; j < m; ++j) {
        std::vector<Rat> c;
        c.reserve(A.size());
        for (const auto& jet : A) c.push_back(jet[j]);
        out.S.push_back(Series<Rat>(std::move(c), Rat(0)));
    }
    return out;
}

LogSeries frobenius_phi(const FrobeniusBasis& basis, int k) {
    LogSeries out;
    for (int a = 0; a <= k; ++a) {
        Rat inv_fact(1, factorial(static_cast<unsigned long>(a)));
        inv_fact.canonicalize();
        out.g.push_back(series_scale(basis.S[static_cast<std::size_t>(k - a)], inv_fact));
    }
    return out;
}

namespace {

// theta acting on sum_a log^a g_a: log^a (theta g_a) + a log^{a-1} g_a
LogSeries theta_log(const LogSeries& s) {
    LogSeries out;
    out.g.resize(s.g.size());
    for (std::size_t a = 0; a < s.g.size(); ++a) {
        out.g[a] = theta_derivative(s.g[a]);
        if (a + 1 < s.g.size())
            out.g[a] = series_add(out.g[a], series_scale(s.g[a + 1], Rat(static_cast<long>(a) + 1)));
    }
    return out;
}

Series<Rat> shift_truncate(const Series<Rat>& s, int i, int n_out) {
    // multiply by t^i, then truncate to order n_out (same offset)
    std::vector<Rat> c(static_cast<std::size_t>(n_out) + 1, Rat(0));
    for (int k = 0; k + i <= n_out && k <= s.order(); ++k)
        c[static_cast<std::size_t>(k + i)] = s.c[static_cast<std::size_t>(k)];
    return Series<Rat>(std::move(c), s.mu);
}

} // namespace

LogSeries apply_operator_log(const ThetaOperator& p, const LogSeries& s) {
    const int n_out = static_cast<int>(s.g[0].order()) - p.r();
    if (n_out < 0) throw precondition_error("apply_operator_log: series too short");
    // powers of theta applied to s
    std::vector<LogSeries> th(static_cast<std::size_t>(p.d()) + 1);
    th[0] = s;
    for (int j = 1; j <= p.d(); ++j) th[static_cast<std::size_t>(j)] = theta_log(th[static_cast<std::size_t>(j - 1)]);

    LogSeries out;
    out.g.assign(s.g.size(), Series<Rat>::constant(Rat(0), n_out));
    for (auto& g : out.g) g.mu = s.g[0].mu;
    for (int i = 0; i <= p.r(); ++i) {
        for (int j = 0; j <= p.d(); ++j) {
            const Int& cij = p.coeff(i, j);
            if (is_zero(cij)) continue;
            for (std::size_t a = 0; a < s.g.size(); ++a) {
                Series<Rat> term = series_scale(th[static_cast<std::size_t>(j)].g[a], Rat(cij));
                out.g[a] = series_add(out.g[a], shift_truncate(term, i, n_out));
            }
        }
    }
    return out;
}

MirrorMap mirror_map(const FrobeniusBasis& basis) {
    if (basis.order < 2) throw precondition_error("mirror_map needs at least a second solution");
    const Series<Rat>& S0 = basis.S[0];
    const Series<Rat>& S1 = basis.S[1];
    Series<Rat> rho_over_phi = series_div(S1, S0);
    if (!is_zero(rho_over_phi.c[0]))
        throw normalization_failure_error("rho(0) != 0 in the mirror map");
    Series<Rat> e = series_exp(rho_over_phi);
    // q = t * e: shift coefficients up by one
    const int N = e.order();
    std::vector<Rat> q(static_cast<std::size_t>(N) + 1, Rat(0));
    for (int k = 0; k + 1 <= N; ++k) q[static_cast<std::size_t>(k + 1)] = e.c[static_cast<std::size_t>(k)];
    MirrorMap out;
    out.q_of_t = Series<Rat>(std::move(q), Rat(0));
    out.t_of_q = series_reversion(out.q_of_t);
    return out;
}

Series<Rat> yukawa(const ThetaOperator& p, const FrobeniusBasis& basis, const Rat& n0, int N) {
    if (basis.order < 3) throw not_mum_error("yukawa needs an operator of order >= 3");
    if (is_zero(n0)) throw precondition_error("yukawa: n0 must be nonzero");
    MirrorMap mm = mirror_map(basis);

    // tau2 = phi2/phi0 = (1/2) log^2 t + log t * u + v with u = S1/S0, v = S2/S0;
    // in the q coordinate the log^2 parts collapse: tau2(q) = (1/2) log^2 q + h,
    // h = v(t(q)) - u(t(q))^2 / 2.
    Series<Rat> u = series_div(basis.S[1], basis.S[0]);
    Series<Rat> v = series_div(basis.S[2], basis.S[0]);
    Series<Rat> uq = series_compose(u, mm.t_of_q);
    Series<Rat> vq = series_compose(v, mm.t_of_q);
    Series<Rat> h = series_sub(vq, series_scale(series_mul(uq, uq), Rat(1, 2)));

    // W = D^2 tau2 = 1 + D^2 h  (D = q d/dq)
    Series<Rat> d2h = theta_derivative(theta_derivative(h));
    Series<Rat> W = d2h;
    W.c[0] += 1;
    if (W.c[0] != 1)
        throw normalization_failure_error("W(0) != 1 in the Yukawa normal form");
    Series<Rat> K = series_scale(W, n0);
    return series_truncate(K, std::min(N, K.order()));
}

InstantonTable instanton_numbers(const Series<Rat>& K, int D) {
    if (is_zero(K.c[0])) throw precondition_error("instanton_numbers: K(0) = 0");
    if (K.order() < D) throw precondition_error("instanton_numbers: K truncated below depth D");
    InstantonTable out;
    out.n0 = K.c[0];
    out.common_denominator = 1;
    for (int d = 1; d <= D; ++d) {
        Rat cd = K.c[static_cast<std::size_t>(d)];
        for (int e = 1; e < d; ++e)
            if (d % e == 0) cd -= out.nd[static_cast<std::size_t>(e - 1)] * Rat(e) * Rat(e) * Rat(e);
        Rat nd = cd / (Rat(d) * Rat(d) * Rat(d));
        out.integral.push_back(is_integer(nd));
        mpz_lcm(out.common_denominator.get_mpz_t(), out.common_denominator.get_mpz_t(),
                nd.get_den().get_mpz_t());
        out.nd.push_back(std::move(nd));
    }
    return out;
}

Series<Rat> lambert_expand(const InstantonTable& table, int D) {
    std::vector<Rat> c(static_cast<std::size_t>(D) + 1, Rat(0));
    c[0] = table.n0;
    for (int d = 1; d <= std::min<int>(D, static_cast<int>(table.nd.size())); ++d) {
        Rat ncube = table.nd[static_cast<std::size_t>(d - 1)] * Rat(d) * Rat(d) * Rat(d);
        for (int j = d; j <= D; j += d) c[static_cast<std::size_t>(j)] += ncube;
    }
    return Series<Rat>(std::move(c), Rat(0));
}

std::string InstantonTable::render(bool machine) const {
    std::ostringstream os;
    if (machine) {
        for (std::size_t d = 0; d < nd.size(); ++d) os << (d + 1) << ": " << rat_str(nd[d]) << "\n";
        return os.str();
    }
    os << "  d | n_d | integral\n";
    for (std::size_t d = 0; d < nd.size(); ++d)
        os << "  " << (d + 1) << " | " << rat_str(nd[d]) << " | "
           << (integral[d] ? "yes" : "no") << "\n";
    if (common_denominator != 1)
        os << "  common denominator: " << int_str(common_denominator) << "\n";
    return os.str();
}

IntegralityReport integrality_report(const ThetaOperator& p, int N, int D, const Rat& n0) {
    IntegralityReport rep;
    rep.phi0_order = N;
    rep.q_order = N;
    rep.depth = D;

    FrobeniusBasis basis = frobenius_solutions(p, std::max(N, D + p.r() + 2));
    rep.phi0_integral = true;
    for (int i = 0; i <= N; ++i)
        if (!is_integer(basis.S[0].c[static_cast<std::size_t>(i)])) rep.phi0_integral = false;

    MirrorMap mm = mirror_map(basis);
    rep.q_integral = true;
    for (int i = 0; i <= std::min(N, mm.q_of_t.order()); ++i)
        if (!is_integer(mm.q_of_t.c[static_cast<std::size_t>(i)])) rep.q_integral = false;

    Series<Rat> K = yukawa(p, basis, n0, std::max(D, 1));
    InstantonTable table = instanton_numbers(K, D);
    rep.nd_common_denominator = table.common_denominator;
    rep.nd_integral = table.common_denominator == 1;

    std::ostringstream os;
    os << "phi0 integral to order " << N << ": " << (rep.phi0_integral ? "yes" : "NO") << "\n"
       << "q(t) integral to order " << N << ": " << (rep.q_integral ? "yes" : "NO") << "\n"
       << "n_d integral to depth " << D << ": " << (rep.nd_integral ? "yes" : "NO")
       << " (common denominator " << int_str(rep.nd_common_denominator) << ")\n";
    rep.text = os.str();
    return rep;
}

} // namespace pfk
