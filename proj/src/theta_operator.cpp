#include "pfk/theta_operator.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "pfk/errors.hpp"

namespace pfk {

PolyQ ThetaOperator::row_poly(int i) const {
    std::vector<Rat> c;
    for (const auto& v : rows[static_cast<std::size_t>(i)]) c.emplace_back(v);
    return PolyQ(std::move(c));
}

Rat ThetaOperator::eval_row(int i, const Rat& x) const {
    Rat acc(0);
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
        acc = acc * x + Rat(row[static_cast<std::size_t>(j)]);
    return acc;
}

EpsilonJet ThetaOperator::eval_row(int i, const EpsilonJet& x) const {
    EpsilonJet acc(x.modulus());
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
        acc = acc * x + EpsilonJet(x.modulus(), Rat(row[static_cast<std::size_t>(j)]));
    return acc;
}

ThetaOperator make_theta_operator(const std::vector<std::vector<Rat>>& raw) {
    if (raw.empty()) throw precondition_error("empty operator");
    // clear denominators over the whole matrix, then strip integer content
    Int lcm(1);
    for (const auto& row : raw)
        for (const auto& v : row)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    Int content(0);
    std::size_t dmax = 0;
    for (const auto& row : raw) dmax = std::max(dmax, row.size());
    std::vector<std::vector<Int>> m;
    for (const auto& row : raw) {
        std::vector<Int> irow(dmax, Int(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            irow[j] = row[j].get_num() * (lcm / row[j].get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), irow[j].get_mpz_t());
        }
        m.push_back(std::move(irow));
    }
    if (is_zero(content)) throw precondition_error("zero operator");

    // strip common left t-power (leading all-zero rows)
    std::size_t first_row = 0;
    auto row_zero = [](const std::vector<Int>& row) {
        for (const auto& v : row)
            if (!is_zero(v)) return false;
        return true;
    };
    while (first_row < m.size() && row_zero(m[first_row])) ++first_row;
    m.erase(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(first_row));
    while (m.size() > 1 && row_zero(m.back())) m.pop_back();

    // tight theta degree
    std::size_t d = 0;
    for (const auto& row : m)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!is_zero(row[j])) d = std::max(d, j);
    for (auto& row : m) row.resize(d + 1, Int(0));

    // sign: first nonzero entry scanning rows ascending, theta powers descending
    int sign = 0;
    for (const auto& row : m) {
        for (int j = static_cast<int>(d); j >= 0 && sign == 0; --j)
            if (!is_zero(row[static_cast<std::size_t>(j)])) sign = sgn(row[static_cast<std::size_t>(j)]);
        if (sign != 0) break;
    }
    if (sign < 0) content = -content;
    for (auto& row : m)
        for (auto& v : row) v /= content;

    ThetaOperator out;
    out.rows = std::move(m);
    return out;
}

ThetaOperator theta_from_polys(const std::vector<PolyQ>& pi) {
    std::vector<std::vector<Rat>> raw;
    for (const auto& p : pi) {
        std::vector<Rat> row;
        for (int j = 0; j <= p.degree(); ++j) row.push_back(p[j]);
        if (row.empty()) row.push_back(Rat(0));
        raw.push_back(std::move(row));
    }
    return make_theta_operator(raw);
}

Series<Rat> apply_operator(const ThetaOperator& p, const Series<Rat>& s) {
    const int r = p.r();
    const int n_out = s.order() - r;
    if (n_out < 0)
        throw precondition_error("apply_operator: series too short for the operator's t-degree");
    std::vector<Rat> out(static_cast<std::size_t>(n_out) + 1, Rat(0));
    for (int n = 0; n <= n_out; ++n) {
        Rat acc(0);
        for (int i = 0; i <= std::min(r, n); ++i)
            acc += p.eval_row(i, Rat(n - i) + s.mu) * s.c[static_cast<std::size_t>(n - i)];
        out[static_cast<std::size_t>(n)] = acc;
    }
    return Series<Rat>(std::move(out), s.mu);
}

std::string theta_to_text(const ThetaOperator& p) {
    std::ostringstream os;
    write_theta(os, p);
    return os.str();
}

void write_theta(std::ostream& os, const ThetaOperator& p) {
    os << "theta-operator d=" << p.d() << " r=" << p.r() << "\n";
    for (int i = 0; i <= p.r(); ++i) {
        os << "t^" << i << ":";
        for (int j = 0; j <= p.d(); ++j) os << " " << int_str(p.coeff(i, j));
        os << "\n";
    }
}

ThetaOperator read_theta(std::istream& is) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            ++lineno;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t b = line.find_first_not_of(" \t\r\n");
            if (b == std::string::npos) continue;
            std::size_t e = line.find_last_not_of(" \t\r\n");
            out = line.substr(b, e - b + 1);
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw parse_error("empty operator file");
    int d = -1, r = -1;
    {
        std::istringstream hs(header);
        std::string tag, dpart, rpart;
        hs >> tag >> dpart >> rpart;
        if (tag != "theta-operator" || dpart.rfind("d=", 0) != 0 || rpart.rfind("r=", 0) != 0)
            throw parse_error("bad operator header '" + header + "'", lineno);
        try {
            d = std::stoi(dpart.substr(2));
            r = std::stoi(rpart.substr(2));
        } catch (const std::exception&) {
            throw parse_error("bad operator header numbers", lineno);
        }
    }
    if (d < 0 || r < 0) throw parse_error("bad operator dimensions", lineno);

    std::vector<std::vector<Rat>> raw;
    for (int i = 0; i <= r; ++i) {
        std::string row_line;
        if (!next_content_line(row_line)) throw parse_error("missing operator row", lineno);
        std::istringstream rs(row_line);
        std::string tpart;
        rs >> tpart;
        if (tpart != "t^" + std::to_string(i) + ":")
            throw parse_error("expected row 't^" + std::to_string(i) + ":', got '" + tpart + "'",
                              lineno);
        std::vector<Rat> row;
        std::string tok;
        while (rs >> tok) row.push_back(parse_rat(tok, lineno));
        if (static_cast<int>(row.size()) != d + 1)
            throw parse_error("row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(d + 1),
                              lineno);
        raw.push_back(std::move(row));
    }
    return make_theta_operator(raw);
}

ThetaOperator theta_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_theta(is);
}

std::string theta_pretty(const ThetaOperator& p) {
    std::string s;
    for (int i = 0; i <= p.r(); ++i) {
        PolyQ row = p.row_poly(i);
        if (row.is_zero_poly()) continue;
        if (!s.empty()) s += " + ";
        s += i == 0 ? "(" : "t^" + std::to_string(i) + "*(";
        s += polyq_str(row, "theta");
        s += ")";
    }
    return s.empty() ? "0" : s;
}

} // namespace pfk
