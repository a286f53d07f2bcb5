#pragma once

#include <string>
#include <vector>

#include "pfk/errors.hpp"
#include "pfk/rational.hpp"

namespace pfk {

// Dense univariate polynomial over an exact field F (Rat or a number field).
// Trailing zero coefficients are always stripped; the zero polynomial has an
// empty coefficient vector and degree -1.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> cs) : c_(std::move(cs)) { strip(); }
    static Poly constant(F v) { return Poly(std::vector<F>{std::move(v)}); }
    static Poly variable() { return Poly(std::vector<F>{F(), F(Rat(1))}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }

    const F& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    F coeff_or_zero(int i) const {
        return (i >= 0 && i <= degree()) ? c_[static_cast<std::size_t>(i)] : F();
    }

    const F& lead() const {
        if (c_.empty()) throw precondition_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
        }
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const F& s) const {
        Poly r = *this;
        for (auto& v : r.c_) v = v * s;
        r.strip();
        return r;
    }

    F eval(const F& x) const {
        F acc{};
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
        return acc;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<F> r(c_.size() - 1, F());
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = scale_by_rat(c_[i], Rat(i));
        return Poly(std::move(r));
    }

    // Taylor shift p(x + a), Horner style.
    Poly shifted(const F& a) const {
        Poly r;
        Poly lin(std::vector<F>{a, F(Rat(1))});
        for (int i = degree(); i >= 0; --i) {
            r = r * lin + Poly::constant(c_[static_cast<std::size_t>(i)]);
        }
        return r;
    }

    // Order of vanishing at 0 (index of first nonzero coefficient).
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == F())) return static_cast<int>(i);
        return -1;
    }

    Poly shifted_down(int k) const { // divide by x^k (requires valuation >= k)
        if (is_zero_poly()) return Poly();
        if (valuation() < k) throw precondition_error("shifted_down: not divisible by x^k");
        return Poly(std::vector<F>(c_.begin() + k, c_.end()));
    }

    Poly times_power(int k) const { // multiply by x^k
        if (is_zero_poly()) return Poly();
        std::vector<F> r(c_.size() + static_cast<std::size_t>(k), F());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
        return Poly(std::move(r));
    }

private:
    void strip() {
        while (!c_.empty() && c_.back() == F()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
void poly_divmod(const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r) {
    if (b.is_zero_poly()) throw precondition_error("polynomial division by zero");
    std::vector<F> rem(a.coeffs());
    std::vector<F> quo;
    int db = b.degree();
    F inv_lead = ring_inverse(b.lead());
    if (static_cast<int>(rem.size()) - 1 >= db)
        quo.assign(rem.size() - static_cast<std::size_t>(db), F());
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        F f = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (f == F()) continue;
        quo[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] =
                rem[static_cast<std::size_t>(i - db + j)] - f * b[j];
    }
    q = Poly<F>(std::move(quo));
    r = Poly<F>(std::move(rem));
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> q, r;
    poly_divmod(a, b, q, r);
    return r;
}

template <class F>
Poly<F> make_monic(const Poly<F>& a) {
    if (a.is_zero_poly()) return a;
    return a.scaled(ring_inverse(a.lead()));
}

// Monic gcd by the Euclidean algorithm over the field F.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero_poly()) {
        Poly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& a) {
    if (a.degree() < 1) return make_monic(a);
    Poly<F> g = poly_gcd(a, a.derivative());
    Poly<F> q, r;
    poly_divmod(a, g, q, r);
    return make_monic(q);
}

using PolyQ = Poly<Rat>;

// Content (gcd of numerators over lcm of denominators) and primitive part
// with integer coefficients, positive leading coefficient not enforced.
inline Int polyq_denominator_lcm(const PolyQ& p) {
    Int l(1);
    for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return l;
}

// Integer-primitive associate of p: integer coefficients with gcd 1 and
// positive leading coefficient.
inline std::vector<Int> polyq_primitive(const PolyQ& p) {
    std::vector<Int> out;
    if (p.is_zero_poly()) return out;
    Int l = polyq_denominator_lcm(p);
    out.reserve(p.coeffs().size());
    Int g(0);
    for (const auto& v : p.coeffs()) {
        Int w = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
        out.push_back(std::move(w));
    }
    if (sgn(out.back()) < 0) g = -g;
    for (auto& w : out) w /= g;
    return out;
}

inline PolyQ polyq_from_int(const std::vector<Int>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return PolyQ(std::move(c));
}

inline std::string polyq_str(const PolyQ& p, const std::string& var = "t") {
    if (p.is_zero_poly()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& v = p[i];
        if (is_zero(v)) continue;
        bool first = s.empty();
        Rat a = v;
        if (!first) {
            s += sgn(a) > 0 ? " + " : " - ";
            if (sgn(a) < 0) a = -a;
        }
        bool unit = a == 1 && i > 0;
        if (!unit) s += rat_str(a);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

// Rational function num/den over Q, kept reduced with integer-primitive
// denominator.
struct RatFunc {
    PolyQ num, den;

    RatFunc() : num(), den(PolyQ::constant(Rat(1))) {}
    explicit RatFunc(PolyQ n) : num(std::move(n)), den(PolyQ::constant(Rat(1))) {}
    RatFunc(PolyQ n, PolyQ d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static RatFunc constant(Rat v) { return RatFunc(PolyQ::constant(std::move(v))); }

    bool is_zero_func() const { return num.is_zero_poly(); }

    void reduce() {
        if (den.is_zero_poly()) throw precondition_error("rational function with zero denominator");
        if (num.is_zero_poly()) {
            den = PolyQ::constant(Rat(1));
            return;
        }
        PolyQ g = poly_gcd(num, den);
        if (g.degree() > 0) {
            PolyQ q, r;
            poly_divmod(num, g, q, r);
            num = q;
            poly_divmod(den, g, q, r);
            den = q;
        }
        // normalize: make the denominator integer-primitive with positive lead
        PolyQ dp = polyq_from_int(polyq_primitive(den));
        Rat scale = den.lead() / dp.lead();
        den = dp;
        num = num.scaled(Rat(1) / scale);
    }

    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num, a.den); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero_func()) throw precondition_error("rational function division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return (a.num * b.den) == (b.num * a.den);
    }

    RatFunc derivative() const {
        return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
    }
};

} // namespace pfk
