#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "pfk/errors.hpp"

namespace pfk {

// All scalar arithmetic in the library is exact.  Int/Rat are GMP-backed;
// mpq_class keeps values canonical (reduced, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_zero(const Int& a) { return sgn(a) == 0; }

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& a) { return a.get_str(); }
inline std::string int_str(const Int& a) { return a.get_str(); }

// Parses "p" or "p/q" (arbitrary precision, optional sign).
inline Rat parse_rat(const std::string& s, int line = -1) {
    if (s.empty()) throw parse_error("empty rational literal", line);
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int p(s, 10);
            return Rat(p);
        }
        Int p(s.substr(0, slash), 10);
        Int q(s.substr(slash + 1), 10);
        if (sgn(q) == 0) throw parse_error("zero denominator in '" + s + "'", line);
        Rat r(p, q);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + s + "'", line);
    }
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    unsigned long a = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), a);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), a);
    if (e < 0) {
        if (sgn(base) == 0) throw precondition_error("0 has no negative power");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    return r;
}

// Exact square root of a nonnegative rational, when it is a perfect square.
inline std::optional<Rat> rat_sqrt_exact(const Rat& a) {
    if (sgn(a) < 0) return std::nullopt;
    const Int& num = a.get_num();
    const Int& den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

// Ring hooks used by generic series/polynomial code; other coefficient rings
// (EpsilonJet, QuadExt, number fields) provide ADL-visible friend overloads.
inline Rat ring_inverse(const Rat& a) {
    if (is_zero(a)) throw precondition_error("division by zero");
    return Rat(1) / a;
}
inline Rat scale_by_rat(const Rat& v, const Rat& s) { return v * s; }

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// (2k-1)!! with the empty-product convention (k=0 -> 1).
inline Int odd_double_factorial(unsigned long k) {
    Int r(1);
    for (unsigned long i = 1; i <= k; ++i) r *= 2 * i - 1;
    return r;
}

} // namespace pfk
