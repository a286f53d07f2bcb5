#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfk/fit.hpp"
#include "pfk/fixtures.hpp"
#include "pfk/periods.hpp"
#include "pfk/problem_io.hpp"

using namespace pfk;

namespace {

Series<Rat> legendre_series(int n) {
    std::vector<Rat> c;
    for (long m = 0; m <= n; ++m) {
        Int b = binomial(2 * static_cast<unsigned long>(m), static_cast<unsigned long>(m));
        Rat v(b * b, int_pow(Int(16), static_cast<unsigned long>(m)));
        v.canonicalize();
        c.push_back(v);
    }
    return Series<Rat>(std::move(c), Rat(0));
}

Series<Rat> quintic_phi0(int n) {
    std::vector<Rat> c;
    for (unsigned long m = 0; m <= static_cast<unsigned long>(n); ++m) {
        Int f = factorial(m);
        Rat v(factorial(5 * m), f * f * f * f * f);
        v.canonicalize();
        c.push_back(v);
    }
    return Series<Rat>(std::move(c), Rat(0));
}

// naive rational Gaussian elimination kernel (independent oracle)
std::vector<std::vector<Rat>> naive_kernel(std::vector<std::vector<Rat>> m, int ncols) {
    const int nrows = static_cast<int>(m.size());
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int r = row; r < nrows; ++r)
            if (!is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(row)]);
        Rat p = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int c = 0; c < ncols; ++c) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] /= p;
        for (int r = 0; r < nrows; ++r) {
            if (r == row) continue;
            Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (is_zero(f)) continue;
            for (int c = 0; c < ncols; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> x(static_cast<std::size_t>(ncols), Rat(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (int rr = static_cast<int>(pivot_col_of_row.size()) - 1; rr >= 0; --rr) {
            int pc = pivot_col_of_row[static_cast<std::size_t>(rr)];
            Rat acc(0);
            for (int c = pc + 1; c < ncols; ++c)
                acc += m[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
            x[static_cast<std::size_t>(pc)] = -acc;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Int> to_primitive(const std::vector<Rat>& x) {
    Int lcm(1), g(0);
    for (const auto& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out;
    for (const auto& v : x) {
        out.push_back(v.get_num() * (lcm / v.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (!is_zero(g)) {
        int sign = 0;
        for (const auto& v : out)
            if (!is_zero(v)) {
                sign = sgn(v);
                break;
            }
        if (sign < 0) g = -g;
        for (auto& v : out) v /= g;
    }
    return out;
}

// canonical form of a kernel: RREF over Q of the basis rows, primitive rows
std::vector<std::vector<Int>> canonical_kernel(std::vector<std::vector<Rat>> basis, int ncols) {
    const int nrows = static_cast<int>(basis.size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int r = row; r < nrows; ++r)
            if (!is_zero(basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(basis[static_cast<std::size_t>(piv)], basis[static_cast<std::size_t>(row)]);
        Rat p = basis[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int c = 0; c < ncols; ++c) basis[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] /= p;
        for (int r = 0; r < nrows; ++r) {
            if (r == row) continue;
            Rat f = basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (is_zero(f)) continue;
            for (int c = 0; c < ncols; ++c)
                basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * basis[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
        }
        ++row;
    }
    std::vector<std::vector<Int>> out;
    for (const auto& b : basis) {
        bool zero = true;
        for (const auto& v : b)
            if (!is_zero(v)) zero = false;
        if (!zero) out.push_back(to_primitive(b));
    }
    return out;
}

std::vector<std::vector<Rat>> to_rat_rows(const std::vector<std::vector<Int>>& rows) {
    std::vector<std::vector<Rat>> out;
    for (const auto& r : rows) {
        std::vector<Rat> row;
        for (const auto& v : r) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

TEST_CASE("apply_operator basics") {
    // theta applied to t^3
    ThetaOperator th = make_theta_operator({{Rat(0), Rat(1)}});
    Series<Rat> t3({Rat(0), Rat(0), Rat(0), Rat(1)}, Rat(0));
    CHECK(apply_operator(th, t3) == Series<Rat>({Rat(0), Rat(0), Rat(0), Rat(3)}, Rat(0)));

    // quintic annihilates its holomorphic solution
    auto phi = quintic_phi0(12);
    auto res = apply_operator(quintic_operator(), phi);
    for (const auto& v : res.c) CHECK(is_zero(v));

    // Legendre operator annihilates the Legendre series
    auto res2 = apply_operator(legendre_operator(), legendre_series(12));
    for (const auto& v : res2.c) CHECK(is_zero(v));

    // offset participates: theta(t^{1/2}) = (1/2) t^{1/2}
    Series<Rat> half({Rat(1)}, Rat(1, 2));
    auto res3 = apply_operator(th, half);
    CHECK(res3.c[0] == Rat(1, 2));
}

TEST_CASE("fit_operator examples") {
    auto fit = fit_operator(legendre_series(5), 2, 1, 6);
    REQUIRE(fit.kernel.size() == 1);
    CHECK(fit.kernel[0] == legendre_operator());

    // geometric series 1/(1-t): theta - t(theta+1)
    Series<Rat> geo(std::vector<Rat>(8, Rat(1)), Rat(0));
    auto gfit = fit_operator(geo, 1, 1, 4);
    ThetaOperator expected = make_theta_operator({{Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}});
    bool found = false;
    for (const auto& op : gfit.kernel)
        if (op == expected) found = true;
    CHECK(found);

    // quintic from 12 coefficients
    auto qfit = fit_operator(quintic_phi0(11), 4, 1, 10);
    REQUIRE(!qfit.kernel.empty());
    CHECK(qfit.kernel[0] == quintic_operator());

    CHECK_THROWS_AS(fit_operator(legendre_series(3), 2, 1, 6), insufficient_terms_error);
}

TEST_CASE("find_minimal_operator on the printed examples") {
    const Fixture& f36 = get_fixture("meyer36");
    auto pe36 = simplex_period(simplex_problem_from_string(f36.problem_text, 40));
    SearchTrace trace;
    ThetaOperator op36 = find_minimal_operator(pe36.series, 4, 8, 6, &trace);
    CHECK(op36 == meyer36_operator());
    CHECK(op36.d() == 4);
    CHECK(op36.r() == 6);

    const Fixture& f70 = get_fixture("meyer70");
    auto pe70 = simplex_period(simplex_problem_from_string(f70.problem_text, 30));
    ThetaOperator op70 = find_minimal_operator(pe70.series, 4, 8);
    CHECK(op70 == meyer70_operator());
    CHECK(op70.r() == 4);

    // Legendre: the first six coefficients suffice
    ThetaOperator leg = find_minimal_operator(legendre_series(11), 2, 1);
    CHECK(leg == legendre_operator());

    Series<Rat> zero(std::vector<Rat>(30, Rat(0)), Rat(0));
    CHECK_THROWS_AS(find_minimal_operator(zero, 2, 2), not_found_error);
}

TEST_CASE("meyer36 determinacy: 34 equations give a 1-dimensional kernel") {
    const Fixture& f36 = get_fixture("meyer36");
    auto pe = simplex_period(simplex_problem_from_string(f36.problem_text, 40));
    auto fit = fit_operator(pe.series, 4, 6, 34);
    CHECK(fit.underdetermined);
    REQUIRE(fit.kernel.size() == 1);
    CHECK(fit.kernel[0] == meyer36_operator());
}

TEST_CASE("required_terms") {
    CHECK(required_terms(4, 6, 6) == 41);
    CHECK(required_terms(0, 0, 0) == 1);
    CHECK(required_terms(2, 1, 4) == 10);
}

TEST_CASE("fraction-free kernel equals the naive rational oracle") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> dim(1, 12), val(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Rat>> m(static_cast<std::size_t>(rows),
                                        std::vector<Rat>(static_cast<std::size_t>(cols)));
        for (auto& r : m)
            for (auto& v : r) v = Rat(val(rng));
        auto mine = rational_kernel(m, cols);
        auto oracle = naive_kernel(m, cols);
        auto canon_mine = canonical_kernel(to_rat_rows(mine), cols);
        auto canon_oracle = canonical_kernel(oracle, cols);
        CHECK(canon_mine == canon_oracle);
    }
}

TEST_CASE("kernel invariance under series rescaling") {
    auto s = legendre_series(9);
    auto base = fit_operator(s, 2, 1, 6).kernel;

    // s -> lambda s: identical kernel
    auto scaled = series_scale(s, Rat(7, 3));
    auto k2 = fit_operator(scaled, 2, 1, 6).kernel;
    REQUIRE(base.size() == k2.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(base[i] == k2[i]);

    // rescaled variable: the series of s(lambda t) is annihilated by the
    // operator with rows P_i scaled by lambda^i (equivalently P_i -> lambda^{-i} P_i
    // going back), exactly
    Rat lambda(3);
    Series<Rat> st = s;
    Rat pw(1);
    for (std::size_t i = 0; i < st.c.size(); ++i) {
        st.c[i] *= pw;
        pw *= lambda;
    }
    auto k3 = fit_operator(st, 2, 1, 6).kernel;
    REQUIRE(k3.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::vector<std::vector<Rat>> raw;
        Rat scale(1);
        for (int row = 0; row <= base[i].r(); ++row) {
            std::vector<Rat> rr;
            for (int j = 0; j <= base[i].d(); ++j) rr.push_back(Rat(base[i].coeff(row, j)) * scale);
            raw.push_back(std::move(rr));
            scale *= lambda;
        }
        CHECK(make_theta_operator(raw) == k3[i]);
    }
}

TEST_CASE("every returned operator annihilates the full series") {
    const Fixture& f70 = get_fixture("meyer70");
    auto pe = simplex_period(simplex_problem_from_string(f70.problem_text, 32));
    ThetaOperator op = find_minimal_operator(pe.series, 4, 6);
    auto res = apply_operator(op, pe.series);
    for (const auto& v : res.c) CHECK(is_zero(v));
}
