#pragma once

#include <string>
#include <vector>

#include "pfk/doperator.hpp"
#include "pfk/polyq.hpp"
#include "pfk/rational.hpp"
#include "pfk/roots.hpp"
#include "pfk/theta_operator.hpp"

namespace pfk {

// One local exponent: exact rational when the indicial root is rational,
// otherwise a descriptor carrying the exact indicial polynomial plus a
// numeric approximation.
struct ExponentEntry {
    bool rational = true;
    Rat value;              // rational case
    std::string indicial;   // algebraic case: exact indicial polynomial (in lambda)
    std::string approx;     // algebraic case: 50-digit numeric root
};

struct SingularPoint {
    enum class Kind { Rational, Algebraic, Infinity };
    Kind kind = Kind::Rational;
    Rat value;                 // rational case
    PolyQ minpoly;             // algebraic case: integer-primitive irreducible
    int root_index = -1;       // which complex root of minpoly labels this point
    std::string approx;        // numeric label of the algebraic point
    std::vector<ExponentEntry> exponents;
    std::string tag;           // classification
    std::string note;          // optional report remark

    std::string label() const;
};

struct RiemannSymbol {
    int order = 0;
    std::vector<SingularPoint> points;

    std::string render_table() const;   // the paper-style aligned table
    std::string machine() const;        // "point | exponents | tag" lines
    std::string fuchs_line() const;     // exponent-sum diagnostic
};

// Roots of the leading delta-coefficient (exact rationals; irreducible
// higher-degree factors as algebraic points with all their complex roots),
// plus t=0 (always analyzed) and infinity.  Deterministic order: rationals
// ascending, algebraic groups by (degree, coefficients) with roots in the
// complex_roots order, infinity last.
std::vector<SingularPoint> singular_points(const DOperator& l);

// Local exponents (indicial roots with multiplicity).  At rational points
// arithmetic runs over Q, at algebraic points over Q[alpha]/(minpoly); at
// infinity the theta form is reversed via t = 1/s.
std::vector<ExponentEntry> indicial_exponents(const DOperator& l, const SingularPoint& pt);

// Pattern classification of an exponent multiset:
//   MUM-candidate, conifold-candidate (order 4), regular, apparent-candidate,
//   other.
std::string classify_point(const std::vector<ExponentEntry>& exponents, int order);

RiemannSymbol riemann_symbol(const ThetaOperator& p);

// (found, labels of MUM-candidate points); empty labels means orphan.
std::pair<bool, std::vector<std::string>> has_mum_point(const ThetaOperator& p);

// Optional log-freeness verification at a rational apparent-singularity
// candidate: tries to build `order` independent log-free Frobenius solutions
// to n_terms coefficients.
bool apparent_point_logfree(const ThetaOperator& p, const Rat& point, int n_terms = 30);

} // namespace pfk
