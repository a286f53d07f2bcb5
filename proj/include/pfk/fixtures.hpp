#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfk/periods.hpp"
#include "pfk/rational.hpp"
#include "pfk/theta_operator.hpp"

namespace pfk {

// Built-in registry of the worked examples: problem input, expected series
// prefix, the printed operator where one exists, expected local data, and the
// Yukawa normalization for the mirror pipeline.
struct Fixture {
    std::string name;
    std::string kind; // "simplex" | "operator" | "laurent"
    std::string description;

    std::string problem_text;              // problem file body (simplex/laurent kinds)
    std::optional<ThetaOperator> op;       // known operator, normalized
    Series<Rat> expected_series;           // leading coefficients (offset included)
    std::vector<std::string> riemann_machine; // expected "point | exponents | tag" lines
    std::optional<Rat> n0;                 // Yukawa normalization K(0)
    std::string notes;
};

const std::vector<Fixture>& fixture_registry();
const Fixture& get_fixture(const std::string& name);

// Frequently used operators, built from the printed theta-polynomials.
ThetaOperator quintic_operator();
ThetaOperator op25_operator();
ThetaOperator legendre_operator();
ThetaOperator meyer36_operator();
ThetaOperator meyer70_operator();

} // namespace pfk
