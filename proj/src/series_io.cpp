#include "pfk/series_io.hpp"

#include <sstream>
#include <vector>

#include "pfk/errors.hpp"

namespace pfk {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void write_series(std::ostream& os, const Series<Rat>& s) {
    if (!is_zero(s.mu)) os << "offset " << rat_str(s.mu) << "\n";
    for (const auto& v : s.c) os << rat_str(v) << "\n";
}

Series<Rat> read_series(std::istream& is) {
    std::vector<Rat> coeffs;
    Rat mu(0);
    bool saw_offset = false, saw_coeff = false;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.empty()) continue;
        if (t.rfind("offset", 0) == 0 &&
            (t.size() == 6 || t[6] == ' ' || t[6] == '\t')) {
            if (saw_offset) throw parse_error("duplicate offset line", lineno);
            if (saw_coeff) throw parse_error("offset line must precede coefficients", lineno);
            std::string rest = strip(t.substr(6));
            if (rest.empty()) throw parse_error("offset line without a value", lineno);
            mu = parse_rat(rest, lineno);
            saw_offset = true;
            continue;
        }
        coeffs.push_back(parse_rat(t, lineno));
        saw_coeff = true;
    }
    if (coeffs.empty()) throw parse_error("series file contains no coefficients");
    return Series<Rat>(std::move(coeffs), mu);
}

std::string series_to_string(const Series<Rat>& s) {
    std::ostringstream os;
    write_series(os, s);
    return os.str();
}

Series<Rat> series_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_series(is);
}

} // namespace pfk
