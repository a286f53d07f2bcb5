#include "pfk/fixtures.hpp"

#include <mutex>

#include "pfk/errors.hpp"

namespace pfk {

namespace {

PolyQ theta_poly(std::vector<Rat> c) { return PolyQ(std::move(c)); }

// (a*theta + b)
PolyQ lin(long a, long b) { return PolyQ(std::vector<Rat>{Rat(b), Rat(a)}); }

PolyQ pw(const PolyQ& p, int e) {
    PolyQ r = PolyQ::constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

Series<Rat> series_of(std::vector<std::string> cs, Rat mu) {
    std::vector<Rat> v;
    for (auto& s : cs) v.push_back(parse_rat(s));
    return Series<Rat>(std::move(v), mu);
}

} // namespace

ThetaOperator quintic_operator() {
    // theta^4 - 5^5 t (theta+1/5)(theta+2/5)(theta+3/5)(theta+4/5)
    PolyQ p0 = pw(lin(1, 0), 4);
    PolyQ p1 = (lin(5, 1) * lin(5, 2) * lin(5, 3) * lin(5, 4)).scaled(Rat(-5));
    return theta_from_polys({p0, p1});
}

ThetaOperator op25_operator() {
    // theta^4 - 4t(2theta+1)^2(11theta^2+11theta+3) - 16t^2(2theta+1)^2(2theta+3)^2
    PolyQ p0 = pw(lin(1, 0), 4);
    PolyQ p1 = (pw(lin(2, 1), 2) * theta_poly({Rat(3), Rat(11), Rat(11)})).scaled(Rat(-4));
    PolyQ p2 = (pw(lin(2, 1), 2) * pw(lin(2, 3), 2)).scaled(Rat(-16));
    return theta_from_polys({p0, p1, p2});
}

ThetaOperator legendre_operator() {
    // 4 theta^2 - t (2theta+1)^2
    return theta_from_polys({pw(lin(1, 0), 2).scaled(Rat(4)), -pw(lin(2, 1), 2)});
}

ThetaOperator meyer36_operator() {
    PolyQ p0 = (lin(1, 0) * lin(1, -2) * pw(lin(1, -1), 2)).scaled(Rat(32));
    PolyQ p1 = (lin(1, 0) * lin(1, -1) * theta_poly({Rat(8), Rat(-13), Rat(9)})).scaled(Rat(-16));
    PolyQ p2 = (lin(1, 0) * theta_poly({Rat(-10), Rat(38), Rat(-32), Rat(33)})).scaled(Rat(8));
    PolyQ p3 = -theta_poly({Rat(20), Rat(76), Rat(304), Rat(104), Rat(252)});
    PolyQ p4 = theta_poly({Rat(38), Rat(160), Rat(292), Rat(224), Rat(132)});
    PolyQ p5 = -theta_poly({Rat(21), Rat(88), Rat(140), Rat(104), Rat(36)});
    PolyQ p6 = pw(lin(1, 1), 4).scaled(Rat(4));
    return theta_from_polys({p0, p1, p2, p3, p4, p5, p6});
}

ThetaOperator meyer70_operator() {
    PolyQ p0 = (lin(1, 0) * lin(1, -2) * pw(lin(1, -1), 2)).scaled(Rat(16));
    PolyQ p1 = (lin(1, 0) * lin(1, -1) * theta_poly({Rat(13), Rat(-24), Rat(24)})).scaled(Rat(-2));
    PolyQ p2 = pw(lin(1, 0), 2) * theta_poly({Rat(25), Rat(0), Rat(52)});
    PolyQ p3 = (theta_poly({Rat(2), Rat(3), Rat(3)}) * pw(lin(2, 1), 2)).scaled(Rat(-2));
    PolyQ p4 = lin(2, 1) * pw(lin(1, 1), 2) * lin(2, 3);
    return theta_from_polys({p0, p1, p2, p3, p4});
}

const std::vector<Fixture>& fixture_registry() {
    static std::vector<Fixture> reg;
    static std::once_flag once;
    std::call_once(once, [] {
        {
            Fixture f;
            f.name = "quintic";
            f.kind = "operator";
            f.description = "hypergeometric operator of the quintic threefold";
            f.op = quintic_operator();
            f.expected_series =
                series_of({"1", "120", "113400", "168168000", "305540235000"}, Rat(0));
            f.riemann_machine = {"0 | 0 0 0 0 | MUM-candidate",
                                 "1/3125 | 0 1 1 2 | conifold-candidate",
                                 "inf | 1/5 2/5 3/5 4/5 | other"};
            f.n0 = Rat(5);
            f.notes = "phi0 = sum (5n)!/(n!)^5 t^n; q = t + 770 t^2 + ...; n_1 = 2875";
            reg.push_back(std::move(f));
        }
        {
            Fixture f;
            f.name = "op25";
            f.kind = "operator";
            f.description = "operator nr. 25: X(1,2,2) in G(2,5), degree 20";
            f.op = op25_operator();
            f.expected_series = series_of({"1", "12", "684", "58800", "6129900"}, Rat(0));
            f.n0 = Rat(20);
            f.notes =
                "A_n = C(2n,n)^2 sum_k C(n,k)^2 C(n+k,k); n0 = 20 reproduces n_1 = 400, "
                "n_2 = 5540, n_3 = 164400 (verified by the acceptance suite)";
            reg.push_back(std::move(f));
        }
        {
            Fixture f;
            f.name = "legendre";
            f.kind = "simplex";
            f.description = "Legendre family of elliptic curves, conifold cycle at t = 0";
            f.problem_text = "dim 1\norder 24\nP: 1-x\n";
            f.op = legendre_operator();
            f.expected_series =
                series_of({"1", "1/4", "9/64", "25/256", "1225/16384", "3969/65536"}, Rat(0));
            f.notes = "coefficients C(2m,m)^2/16^m; operator found from six terms";
            reg.push_back(std::move(f));
        }
        {
            Fixture f;
            f.name = "meyer36";
            f.kind = "simplex";
            f.description = "double octic configuration no. 36 (vanishing tetrahedron)";
            f.problem_text = "dim 3\norder 41\nP: (1-x)*(1-z)*(1-x-y)*(1+(t-2)*x-y-z)\n";
            f.op = meyer36_operator();
            f.expected_series = series_of(
                {"1", "1", "43/48", "19/24", "10811/15360", "9713/15360"}, Rat(1));
            f.riemann_machine = {"0 | 0 1 1 2 | conifold-candidate",
                                 "1 | 0 0 0 0 | MUM-candidate",
                                 "2 | 0 0 2 2 | other",
                                 "inf | 1 1 1 1 | MUM-candidate"};
            f.notes = "operator determined by the first 34 terms";
            reg.push_back(std::move(f));
        }
        {
            Fixture f;
            f.name = "meyer70";
            f.kind = "simplex";
            f.description = "double octic configuration no. 70: an orphan operator";
            f.problem_text =
                "dim 3\norder 30\nP: (1-x)*(1-z)*(x+y+z-1)*(x/2+y/2+z/2-1)\n";
            f.op = meyer70_operator();
            f.expected_series = series_of(
                {"1", "13/16", "485/768", "12299/24576", "534433/1310720", "21458473/62914560"},
                Rat(1));
            f.riemann_machine = {"0 | 0 1 1 2 | conifold-candidate",
                                 "1 | 0 0 1 1 | other",
                                 "2 | 0 0 1 1 | other",
                                 "inf | 1/2 1 1 3/2 | other"};
            f.notes =
                "paper writes the radicand as xyz(x+y+z-t)P; the overall sign inside the "
                "square root leaves the even-power expansion unchanged (the integrand squares "
                "it away), asserted by test_periods";
            reg.push_back(std::move(f));
        }
        {
            Fixture f;
            f.name = "meyer254";
            f.kind = "simplex";
            f.description = "double octic configuration no. 254 (new operator, apparent points)";
            f.problem_text =
                "dim 3\norder 24\n"
                "P: (1-3*z+t-t^2*x+t*z-t*x-2*y)*(1-z+t*x-2*x)*(1-t*x+z)"
                "*(1+t-t^2*x+t*z-5*t*x+z-2*y-4*x)\n";
            f.expected_series = series_of(
                {"1", "1/2", "37/24", "41/16", "13477/1920", "14597/768"}, Rat(1));
            f.notes =
                "no operator printed in the source (\"very complicated\"); expected finite "
                "singularities include t^2+4t-1 and 2t^3-t^2-3t+4; exponents 0,1,1,2 at 0 "
                "and 0,1,3,4 at the cubic's roots";
            reg.push_back(std::move(f));
        }
    });
    return reg;
}

const Fixture& get_fixture(const std::string& name) {
    for (const auto& f : fixture_registry())
        if (f.name == name) return f;
    throw not_found_error("unknown fixture '" + name + "'");
}

} // namespace pfk
