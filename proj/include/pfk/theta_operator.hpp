#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfk/epsilon_jet.hpp"
#include "pfk/polyq.hpp"
#include "pfk/rational.hpp"
#include "pfk/series.hpp"

namespace pfk {

// Differential operator in theta form  P = sum_i t^i P_i(theta)  with
// t-multiplication written on the left.  rows[i][j] is the integer
// coefficient of t^i theta^j.  Normalized form: entries integer and
// collectively coprime, no common left t-power, trailing zero rows/columns
// trimmed, and the first nonzero entry in the scan order (i ascending,
// j descending from d) is positive.
struct ThetaOperator {
    std::vector<std::vector<Int>> rows;

    int r() const { return static_cast<int>(rows.size()) - 1; }
    int d() const { return rows.empty() ? -1 : static_cast<int>(rows[0].size()) - 1; }
    int order() const { return d(); }

    const Int& coeff(int i, int j) const {
        return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    // P_i as a polynomial in theta
    PolyQ row_poly(int i) const;

    Rat eval_row(int i, const Rat& x) const;          // P_i(x)
    EpsilonJet eval_row(int i, const EpsilonJet& x) const;

    bool operator==(const ThetaOperator& o) const { return rows == o.rows; }
};

// Build the normalized operator from rational coefficient rows (rows[i][j] =
// coefficient of t^i theta^j).  Throws if every entry is zero.
ThetaOperator make_theta_operator(const std::vector<std::vector<Rat>>& raw);

// Build from theta-polynomials P_0..P_r.
ThetaOperator theta_from_polys(const std::vector<PolyQ>& pi);

// Coefficient of t^{n+mu} of P(s) is sum_i P_i(n-i+mu) a_{n-i}; the result
// keeps offset mu and has truncation order N - r.
Series<Rat> apply_operator(const ThetaOperator& p, const Series<Rat>& s);

// Text format (bit-exact round trip):
//   theta-operator d=<d> r=<r>
//   t^0: c_0 c_1 ... c_d
//   ...
std::string theta_to_text(const ThetaOperator& p);
ThetaOperator theta_from_text(const std::string& text);
void write_theta(std::ostream& os, const ThetaOperator& p);
ThetaOperator read_theta(std::istream& is);

// Pretty printer for reports: "32*theta^4 - ..." grouped by t-power.
std::string theta_pretty(const ThetaOperator& p);

} // namespace pfk
