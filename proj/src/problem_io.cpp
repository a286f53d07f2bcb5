#include "pfk/problem_io.hpp"

#include <sstream>
#include <vector>

#include "pfk/errors.hpp"
#include "pfk/expr_parser.hpp"

namespace pfk {

namespace {

struct Line {
    std::string text;
    int number;
};

std::vector<Line> content_lines(std::istream& is) {
    std::vector<Line> out;
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        ++n;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r\n");
        out.push_back({line.substr(b, e - b + 1), n});
    }
    return out;
}

struct Header {
    int dim = -1;
    int order = -1;
    std::vector<Line> rest;
};

Header parse_header(const std::vector<Line>& lines) {
    Header h;
    for (const auto& l : lines) {
        std::istringstream ls(l.text);
        std::string key;
        ls >> key;
        if (key == "dim") {
            if (!(ls >> h.dim) || h.dim < 1) throw parse_error("bad dim line", l.number);
        } else if (key == "order") {
            if (!(ls >> h.order) || h.order < 0) throw parse_error("bad order line", l.number);
        } else {
            h.rest.push_back(l);
        }
    }
    return h;
}

std::string expect_field(const Header& h, const std::string& key) {
    for (const auto& l : h.rest) {
        if (l.text.rfind(key + ":", 0) == 0) return l.text.substr(key.size() + 1);
    }
    throw parse_error("missing '" + key + ":' line");
}

} // namespace

SimplexProblem read_simplex_problem(std::istream& is, int order_override) {
    Header h = parse_header(content_lines(is));
    if (h.dim < 1) throw parse_error("simplex problem needs a 'dim n' line");
    int order = order_override >= 0 ? order_override : h.order;
    if (order < 0) throw parse_error("simplex problem needs an 'order N' line or --order");
    SimplexProblem p;
    p.n = h.dim;
    p.order = order;
    p.P = parse_problem_poly(expect_field(h, "P"), h.dim, /*with_t=*/true);
    return p;
}

MorseProblem read_morse_problem(std::istream& is, int order_override) {
    Header h = parse_header(content_lines(is));
    if (h.dim < 1) throw parse_error("morse problem needs a 'dim n' line");
    int order = order_override >= 0 ? order_override : h.order;
    if (order < 0) throw parse_error("morse problem needs an 'order N' line or --order");
    MorseProblem p;
    p.n = h.dim;
    p.order = order;
    p.f = parse_problem_poly(expect_field(h, "f"), h.dim, /*with_t=*/false);
    p.A = parse_problem_poly(expect_field(h, "A"), h.dim, /*with_t=*/false);
    return p;
}

LaurentPoly read_laurent(std::istream& is) {
    auto lines = content_lines(is);
    if (lines.empty()) throw parse_error("empty Laurent polynomial file");
    int nvars = -1;
    LaurentPoly f;
    for (const auto& l : lines) {
        std::size_t colon = l.text.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'e1 ... ek : coefficient'", l.number);
        std::istringstream es(l.text.substr(0, colon));
        Expo e;
        long v;
        while (es >> v) e.push_back(static_cast<int32_t>(v));
        if (e.empty()) throw parse_error("no exponents before ':'", l.number);
        if (nvars < 0) {
            nvars = static_cast<int>(e.size());
            f = LaurentPoly(nvars);
        } else if (static_cast<int>(e.size()) != nvars) {
            throw parse_error("inconsistent exponent count", l.number);
        }
        std::string coeff = l.text.substr(colon + 1);
        std::size_t b = coeff.find_first_not_of(" \t");
        if (b == std::string::npos) throw parse_error("missing coefficient", l.number);
        std::size_t en = coeff.find_last_not_of(" \t");
        f.add_term(e, parse_rat(coeff.substr(b, en - b + 1), l.number));
    }
    return f;
}

SimplexProblem simplex_problem_from_string(const std::string& text, int order_override) {
    std::istringstream is(text);
    return read_simplex_problem(is, order_override);
}

MorseProblem morse_problem_from_string(const std::string& text, int order_override) {
    std::istringstream is(text);
    return read_morse_problem(is, order_override);
}

LaurentPoly laurent_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_laurent(is);
}

} // namespace pfk
