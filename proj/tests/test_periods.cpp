#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfk/expr_parser.hpp"
#include "pfk/fixtures.hpp"
#include "pfk/periods.hpp"
#include "pfk/problem_io.hpp"
#include "pfk/series.hpp"

using namespace pfk;

namespace {

Rat R(const std::string& s) { return parse_rat(s); }

SimplexProblem simplex_from(const std::string& text, int order) {
    return simplex_problem_from_string(text, order);
}

// brute-force constant term of f^m by unpruned repeated multiplication
Rat brute_constant_term(const LaurentPoly& f, int m) {
    LaurentPoly g = LaurentPoly::constant(f.nvars(), Rat(1));
    for (int i = 0; i < m; ++i) g = g * f;
    return g.constant_term();
}

LaurentPoly random_laurent(std::mt19937_64& rng, int nvars, int max_terms) {
    std::uniform_int_distribution<int> expo(-2, 2), coef(-4, 4), nterms(1, max_terms);
    LaurentPoly f(nvars);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Expo e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = expo(rng);
        int c = coef(rng);
        if (c == 0) c = 1;
        f.add_term(e, Rat(c));
    }
    return f;
}

// 1-D oracle for f = x^2 + x^k: revert g(x) = x sqrt(1 + x^{k-2}) and read the
// odd part; A_i = (2i+1) G_{2i+1} after normalizing G_1 = 1.
std::vector<Rat> one_dim_thimble_oracle(int k, int N) {
    int n = 2 * N + 3;
    std::vector<Rat> one(static_cast<std::size_t>(n) + 1, Rat(0));
    one[0] = 1;
    one[static_cast<std::size_t>(k - 2)] = 1; // 1 + x^{k-2}
    Series<Rat> base(std::move(one), Rat(0));
    Series<Rat> root = series_mul(base, series_inv_sqrt(base)); // sqrt(1 + x^{k-2})
    std::vector<Rat> gx(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i + 1 <= n; ++i) gx[static_cast<std::size_t>(i + 1)] = root.c[static_cast<std::size_t>(i)];
    Series<Rat> g(std::move(gx), Rat(0));
    Series<Rat> G = series_reversion(g);
    std::vector<Rat> out;
    for (int i = 0; i <= N; ++i)
        out.push_back(Rat(2 * i + 1) * G.c[static_cast<std::size_t>(2 * i + 1)]);
    return out;
}

PolyRat poly2(const std::string& expr) { return parse_problem_poly(expr, 2, false); }
PolyRat poly3(const std::string& expr) { return parse_problem_poly(expr, 3, false); }

} // namespace

TEST_CASE("simplex_moment") {
    CHECK(simplex_moment(3, {1, 0, 0}) == Rat(1, 4));
    CHECK(simplex_moment(3, {0, 0, 0}) == Rat(1));
    CHECK(simplex_moment(5, {0, 0, 0, 0, 0}) == Rat(1));
    for (long m = 0; m <= 8; ++m) {
        Rat expect(binomial(2 * static_cast<unsigned long>(m), static_cast<unsigned long>(m)),
                   int_pow(Int(4), static_cast<unsigned long>(m)));
        expect.canonicalize();
        CHECK(simplex_moment(1, {m}) == expect);
    }
    // paper's tetrahedral value: I(1,1,0)/I(0) = (2!2!/(16*2*4!)) * ... direct formula
    CHECK(simplex_moment(3, {1, 1, 0}) == R("1/24"));
}

TEST_CASE("simplex_period trivial and Legendre") {
    // n=3, P=1: only the k=0 moment survives
    auto pe = simplex_period(simplex_from("dim 3\nP: 1\n", 6));
    CHECK(pe.series.mu == Rat(1));
    CHECK(pe.series.c[0] == 1);
    for (int i = 1; i <= 6; ++i) CHECK(is_zero(pe.series.c[static_cast<std::size_t>(i)]));
    CHECK(pe.pi_power == Rat(2));
    CHECK(pe.prefactor.has_value());
    CHECK(*pe.prefactor == 1);

    // n=1, P=1-x: C(2m,m)^2/16^m, exact for m <= 20
    auto leg = simplex_period(simplex_from("dim 1\nP: 1-x\n", 20));
    CHECK(leg.series.mu == Rat(0));
    CHECK(leg.pi_power == Rat(1));
    for (long m = 0; m <= 20; ++m) {
        Int b = binomial(2 * static_cast<unsigned long>(m), static_cast<unsigned long>(m));
        Rat expect(b * b, int_pow(Int(16), static_cast<unsigned long>(m)));
        expect.canonicalize();
        CHECK(leg.series.c[static_cast<std::size_t>(m)] == expect);
    }
}

TEST_CASE("simplex_period printed expansions") {
    const Fixture& f36 = get_fixture("meyer36");
    auto pe36 = simplex_period(simplex_problem_from_string(f36.problem_text, 8));
    CHECK(pe36.series.mu == Rat(1));
    for (int i = 0; i <= 5; ++i)
        CHECK(pe36.series.c[static_cast<std::size_t>(i)] ==
              f36.expected_series.c[static_cast<std::size_t>(i)]);

    const Fixture& f70 = get_fixture("meyer70");
    auto pe70 = simplex_period(simplex_problem_from_string(f70.problem_text, 8));
    for (int i = 0; i <= 5; ++i)
        CHECK(pe70.series.c[static_cast<std::size_t>(i)] ==
              f70.expected_series.c[static_cast<std::size_t>(i)]);

    const Fixture& f254 = get_fixture("meyer254");
    auto pe254 = simplex_period(simplex_problem_from_string(f254.problem_text, 8));
    for (int i = 0; i <= 5; ++i)
        CHECK(pe254.series.c[static_cast<std::size_t>(i)] ==
              f254.expected_series.c[static_cast<std::size_t>(i)]);
}

TEST_CASE("simplex_period invariances") {
    // permuting the x variables leaves the expansion unchanged
    auto a = simplex_period(simplex_from("dim 3\nP: (1-x)*(1-2*z)*(1+t*y-x)\n", 10));
    auto b = simplex_period(simplex_from("dim 3\nP: (1-y)*(1-2*x)*(1+t*z-y)\n", 10));
    CHECK(a.series == b.series);

    // the overall sign of P only flips the prefactor square, not the series
    auto p = simplex_period(simplex_from("dim 3\nP: (1-x)*(1-z)*(x+y+z-1)*(x/2+y/2+z/2-1)\n", 6));
    auto q = simplex_period(
        simplex_from("dim 3\nP: -((1-x)*(1-z)*(x+y+z-1)*(x/2+y/2+z/2-1))\n", 6));
    CHECK(p.series == q.series);
    CHECK(p.prefactor_square == -q.prefactor_square);

    CHECK_THROWS_AS(simplex_period(simplex_from("dim 2\nP: x+t\n", 4)),
                    violated_nonvanishing_error);
    // non-square constant still yields the normalized rational series
    auto ns = simplex_period(simplex_from("dim 1\nP: 3*(1-x)\n", 6));
    auto sq = simplex_period(simplex_from("dim 1\nP: 1-x\n", 6));
    CHECK(ns.series == sq.series);
    CHECK(!ns.prefactor.has_value());
    CHECK(ns.prefactor_square == Rat(1, 3));
}

TEST_CASE("constant_term_series basics") {
    // constant polynomial
    LaurentPoly c = LaurentPoly::constant(2, Rat(3));
    auto s = constant_term_series(c, 5);
    Rat p(1);
    for (int m = 0; m <= 5; ++m) {
        CHECK(s.c[static_cast<std::size_t>(m)] == p);
        p *= 3;
    }

    // x + 1/x: central binomial coefficients at even powers
    LaurentPoly f(1);
    f.add_term({1}, Rat(1));
    f.add_term({-1}, Rat(1));
    auto cb = constant_term_series(f, 8);
    std::vector<long> expect = {1, 0, 2, 0, 6, 0, 20, 0, 70};
    for (int m = 0; m <= 8; ++m) CHECK(cb.c[static_cast<std::size_t>(m)] == Rat(expect[static_cast<std::size_t>(m)]));
}

TEST_CASE("constant_term_series quintic mirror") {
    LaurentPoly f(4);
    f.add_term({1, 0, 0, 0}, Rat(1));
    f.add_term({0, 1, 0, 0}, Rat(1));
    f.add_term({0, 0, 1, 0}, Rat(1));
    f.add_term({0, 0, 0, 1}, Rat(1));
    f.add_term({-1, -1, -1, -1}, Rat(1));
    auto s = constant_term_series(f, 10);
    CHECK(s.c[5] == Rat(120));
    CHECK(s.c[10] == Rat(113400));
    CHECK(is_zero(s.c[7]));
}

TEST_CASE("constant_term_series pruning is exact") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly f = random_laurent(rng, 2, 5);
        const int N = 8;
        auto pruned = constant_term_series(f, N, true);
        auto plain = constant_term_series(f, N, false);
        CHECK(pruned == plain);
        for (int m = 0; m <= N; ++m)
            CHECK(pruned.c[static_cast<std::size_t>(m)] == brute_constant_term(f, m));
    }
}

TEST_CASE("ball_moment") {
    CHECK(ball_moment(3, {0, 0, 0}) == Rat(1));
    CHECK(ball_moment(3, {1, 0, 0}) == Rat(1, 5));
    CHECK(ball_moment(2, {1, 1}) == Rat(1, 24));

    // recursion M(k+e1)/M(k) = (2k1+1)/(2(n/2+|k|+1))
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> kd(0, 4);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<long> k(static_cast<std::size_t>(n));
            long tot = 0;
            for (auto& x : k) {
                x = kd(rng);
                tot += x;
            }
            std::vector<long> k1 = k;
            k1[0] += 1;
            Rat lhs = ball_moment(n, k1) / ball_moment(n, k);
            Rat rhs = Rat(2 * k[0] + 1) / (Rat(2) * (Rat(n, 2) + tot + 1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("morse_normalize") {
    // f = x^2: nothing to do
    MorseProblem p1{1, parse_problem_poly("x^2", 1, false), parse_problem_poly("1", 1, false), 4};
    auto n1 = morse_normalize(p1);
    CHECK(n1.ctx->squares.empty());
    CHECK(n1.d.is_rational());
    CHECK(n1.d.rational_part() == 1);

    // f = 2x^2: d^2 = 1/2 via the adjoined root of 2
    MorseProblem p2{1, parse_problem_poly("2*x^2", 1, false), parse_problem_poly("1", 1, false), 4};
    auto n2 = morse_normalize(p2);
    REQUIRE(n2.ctx->squares.size() == 1);
    CHECK(n2.ctx->squares[0] == Rat(2));
    QuadExt d2 = n2.d * n2.d;
    CHECK(d2.is_rational());
    CHECK(d2.rational_part() == Rat(1, 2));

    // f = x^2 + x^3: one substitution step removes the cubic part
    MorseProblem p3{1, parse_problem_poly("x^2+x^3", 1, false), parse_problem_poly("1", 1, false), 3};
    auto n3 = morse_normalize(p3);
    for (const auto& [e, v] : n3.g.terms()) {
        if (e[0] == 2) continue; // the quadratic part survives
        CHECK(e[0] > n3.working_degree); // nothing else below the cutoff
    }

    MorseProblem bad{2, poly2("x^2+2*x*y+y^2"), poly2("1"), 4};
    CHECK_THROWS_AS(morse_normalize(bad), degenerate_quadratic_error);
}

TEST_CASE("morse_period closed forms") {
    // f = sum x_i^2, omega = dx: the series is identically 1
    for (int n = 1; n <= 3; ++n) {
        std::string fx = "x1^2";
        for (int i = 2; i <= n; ++i) fx += "+x" + std::to_string(i) + "^2";
        MorseProblem p{n, parse_problem_poly(fx, n, false), parse_problem_poly("1", n, false), 5};
        auto pe = morse_period(p);
        Rat expect_mu(n - 2, 2);
        expect_mu.canonicalize();
        CHECK(pe.series.mu == expect_mu);
        CHECK(pe.series.c[0] == 1);
        for (int i = 1; i <= 5; ++i) CHECK(is_zero(pe.series.c[static_cast<std::size_t>(i)]));
        if (n == 1) {
            CHECK(pe.prefactor.has_value());
            CHECK(*pe.prefactor == 1);
            CHECK(pe.pi_power == Rat(0));
        }
    }
}

TEST_CASE("morse_period against the 1-D thimble oracle") {
    for (int k : {3, 4}) {
        std::string fx = k == 3 ? "x^2+x^3" : "x^2+x^4";
        MorseProblem p{1, parse_problem_poly(fx, 1, false), parse_problem_poly("1", 1, false), 8};
        auto pe = morse_period(p);
        auto oracle = one_dim_thimble_oracle(k, 8);
        CHECK(oracle[0] == 1);
        for (int i = 0; i <= 8; ++i)
            CHECK(pe.series.c[static_cast<std::size_t>(i)] == oracle[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("morse_period linear-change invariance (spot)") {
    // f(x,y) = x^2 + xy + 3y^2 + x^3, A = 1 + x; M = [[1,2],[1,-1]], det = -3.
    // Transporting the full volume form, A -> (A o M) * det M, leaves the
    // period invariant (the det over |det| of the substitution squares away);
    // with a bare density, A -> A o M, the prefactor square picks up det^-2.
    MorseProblem p{2, poly2("x^2+x*y+3*y^2+x^3"), poly2("1+x"), 6};
    auto pe = morse_period(p);
    MorseProblem q{2,
                   poly2("(x+2*y)^2+(x+2*y)*(x-y)+3*(x-y)^2+(x+2*y)^3"),
                   poly2("(1+(x+2*y))*(-3)"), 6};
    auto qe = morse_period(q);
    CHECK(pe.series == qe.series);
    CHECK(qe.prefactor_square == pe.prefactor_square);

    MorseProblem q2{2, q.f, poly2("1+(x+2*y)"), 6};
    auto qe2 = morse_period(q2);
    CHECK(pe.series == qe2.series);
    CHECK(qe2.prefactor_square * 9 == pe.prefactor_square);

    // rationality is part of the contract: every coefficient exact rational
    for (const auto& c : pe.series.c) CHECK(c.get_den() >= 1);
}
