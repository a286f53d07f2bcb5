#pragma once

#include <stdexcept>
#include <string>

namespace pfk {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file or expression.  `line` is 1-based, -1 if unknown.
struct parse_error : error {
    int line;
    explicit parse_error(const std::string& msg, int line_ = -1)
        : error(line_ >= 0 ? "parse error (line " + std::to_string(line_) + "): " + msg
                           : "parse error: " + msg),
          line(line_) {}
};

// A precondition of an engine operation does not hold.
struct precondition_error : error {
    using error::error;
};

struct zero_leading_error : precondition_error {
    zero_leading_error() : precondition_error("ZeroLeading: series has zero leading coefficient") {}
};

struct non_square_leading_error : precondition_error {
    explicit non_square_leading_error(const std::string& what_)
        : precondition_error("NonSquareLeading: " + what_) {}
};

struct bad_leading_error : precondition_error {
    explicit bad_leading_error(const std::string& what_)
        : precondition_error("BadLeading: " + what_) {}
};

struct violated_nonvanishing_error : precondition_error {
    violated_nonvanishing_error()
        : precondition_error("ViolatedNonvanishing: P(0;0) = 0") {}
};

struct degenerate_quadratic_error : precondition_error {
    degenerate_quadratic_error()
        : precondition_error("DegenerateQuadraticPart: det f_2 = 0, not an A1 point") {}
};

struct irrational_coefficient_error : precondition_error {
    explicit irrational_coefficient_error(const std::string& what_)
        : precondition_error("IrrationalCoefficient: " + what_) {}
};

struct not_supported_error : precondition_error {
    explicit not_supported_error(const std::string& what_)
        : precondition_error("NotSupported: " + what_) {}
};

struct insufficient_terms_error : precondition_error {
    explicit insufficient_terms_error(const std::string& what_)
        : precondition_error("InsufficientTerms: " + what_) {}
};

struct normalization_failure_error : error {
    explicit normalization_failure_error(const std::string& what_)
        : error("NormalizationFailure: " + what_) {}
};

// Search-style failures (exit code 4 in the CLI).
struct not_found_error : error {
    explicit not_found_error(const std::string& what_) : error("NotFound: " + what_) {}
};

struct not_mum_error : error {
    explicit not_mum_error(const std::string& what_) : error("NotMUM: " + what_) {}
};

} // namespace pfk
