#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "pfk/errors.hpp"
#include "pfk/rational.hpp"

namespace pfk {

using Expo = std::vector<int32_t>;

inline int64_t expo_total(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), int64_t(0));
}

// Sparse multivariate polynomial over R with a fixed variable count.
// Exponents are signed so the same container doubles as a Laurent
// polynomial; ordinary polynomials simply never hold negative entries.
// No zero coefficient is ever stored.
template <class R>
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, R v) {
        MultiPoly p(nvars);
        if (!(v == R())) p.terms_[Expo(static_cast<std::size_t>(nvars), 0)] = std::move(v);
        return p;
    }

    static MultiPoly monomial(int nvars, const Expo& e, R v) {
        MultiPoly p(nvars);
        if (!(v == R())) p.terms_[e] = std::move(v);
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        Expo e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return monomial(nvars, e, R(Rat(1)));
    }

    int nvars() const { return nvars_; }
    const std::map<Expo, R>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Expo& e, const R& v) {
        if (v == R()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, v);
        } else {
            it->second = it->second + v;
            if (it->second == R()) terms_.erase(it);
        }
    }

    R coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? R() : it->second;
    }

    R constant_term() const { return coeff(Expo(static_cast<std::size_t>(nvars_), 0)); }

    int64_t total_degree() const {
        int64_t d = 0;
        for (const auto& [e, v] : terms_) d = std::max(d, expo_total(e));
        return terms_.empty() ? -1 : d;
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.nvars_);
        for (const auto& [e, v] : a.terms_) r.terms_[e] = -v;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_vars(a, b);
        MultiPoly r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e, v);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        return mul_capped(a, b, -1);
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Product truncated at total degree cap (cap < 0 means no truncation).
    static MultiPoly mul_capped(const MultiPoly& a, const MultiPoly& b, int64_t cap) {
        check_vars(a, b);
        MultiPoly r(a.nvars_);
        Expo e(static_cast<std::size_t>(a.nvars_), 0);
        for (const auto& [ea, va] : a.terms_) {
            for (const auto& [eb, vb] : b.terms_) {
                int64_t tot = 0;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    tot += e[i];
                }
                if (cap >= 0 && tot > cap) continue;
                r.add_term(e, va * vb);
            }
        }
        return r;
    }

    MultiPoly scaled(const R& s) const {
        MultiPoly r(nvars_);
        for (const auto& [e, v] : terms_) r.add_term(e, v * s);
        return r;
    }

    MultiPoly truncated(int64_t cap) const {
        MultiPoly r(nvars_);
        for (const auto& [e, v] : terms_)
            if (expo_total(e) <= cap) r.terms_[e] = v;
        return r;
    }

    // Homogeneous part of total degree k.
    MultiPoly homogeneous_part(int64_t k) const {
        MultiPoly r(nvars_);
        for (const auto& [e, v] : terms_)
            if (expo_total(e) == k) r.terms_[e] = v;
        return r;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, v] : terms_) {
            int32_t k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Expo ne = e;
            ne[static_cast<std::size_t>(var)] = k - 1;
            r.add_term(ne, scale_by_rat(v, Rat(k)));
        }
        return r;
    }

    // Simultaneous substitution x_i -> images[i], truncated at total degree
    // cap (cap < 0: exact).  Exponents must be nonnegative.
    MultiPoly substituted(const std::vector<MultiPoly>& images, int64_t cap) const {
        // power tables, images[i]^k for every exponent that actually occurs
        std::vector<std::vector<MultiPoly>> pows(static_cast<std::size_t>(nvars_));
        for (std::size_t i = 0; i < pows.size(); ++i)
            pows[i].push_back(constant(nvars_, R(Rat(1))));
        for (const auto& [e, v] : terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0) throw precondition_error("substitution requires nonnegative exponents");
                while (static_cast<int32_t>(pows[i].size()) <= e[i])
                    pows[i].push_back(mul_capped(pows[i].back(), images[i], cap));
            }
        }
        MultiPoly r(nvars_);
        for (const auto& [e, v] : terms_) {
            MultiPoly term = constant(nvars_, v);
            for (std::size_t i = 0; i < e.size() && !term.is_zero_poly(); ++i)
                if (e[i] > 0) term = mul_capped(term, pows[i][static_cast<std::size_t>(e[i])], cap);
            r = r + term;
        }
        return r;
    }

private:
    static void check_vars(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) throw precondition_error("MultiPoly variable count mismatch");
    }

    int nvars_;
    std::map<Expo, R> terms_;
};

using PolyRat = MultiPoly<Rat>;
using LaurentPoly = MultiPoly<Rat>;

} // namespace pfk
