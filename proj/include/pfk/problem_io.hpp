#pragma once

#include <istream>
#include <string>

#include "pfk/multipoly.hpp"
#include "pfk/periods.hpp"

namespace pfk {

// Problem file formats (comments start with '#'):
//   simplex:  dim n / order N / P: <expression>
//   morse:    dim n / order N / f: <expression> / A: <expression>
//   laurent:  one monomial per line, "e1 e2 ... ek : p/q"
SimplexProblem read_simplex_problem(std::istream& is, int order_override = -1);
MorseProblem read_morse_problem(std::istream& is, int order_override = -1);
LaurentPoly read_laurent(std::istream& is);

SimplexProblem simplex_problem_from_string(const std::string& text, int order_override = -1);
MorseProblem morse_problem_from_string(const std::string& text, int order_override = -1);
LaurentPoly laurent_from_string(const std::string& text);

} // namespace pfk
