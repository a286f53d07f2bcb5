#pragma once

#include <vector>

#include "pfk/errors.hpp"
#include "pfk/rational.hpp"

namespace pfk {

// Element of Q[eps]/(eps^m): the Frobenius deformation device.  The modulus m
// is a per-value constructor parameter (the operator order, 4 for CY cases).
// A default-constructed jet is the scalar 0 with modulus 1 and acts as a
// neutral element that adopts the modulus of its partner.
class EpsilonJet {
public:
    EpsilonJet() : c_(1, Rat(0)) {}
    explicit EpsilonJet(int modulus, Rat constant = Rat(0)) : c_(check_mod(modulus), Rat(0)) {
        c_[0] = std::move(constant);
    }
    explicit EpsilonJet(std::vector<Rat> comps) : c_(std::move(comps)) {
        check_mod(static_cast<int>(c_.size()));
    }

    // n + eps, the argument fed to P_i along the deformed recursion.
    static EpsilonJet shifted_eps(int modulus, const Rat& n) {
        EpsilonJet j(modulus, n);
        if (modulus > 1) j.c_[1] = 1;
        return j;
    }

    int modulus() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rat& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rat>& comps() const { return c_; }

    bool is_scalar_zero() const {
        for (const auto& v : c_)
            if (!is_zero(v)) return false;
        return true;
    }

    friend EpsilonJet operator-(const EpsilonJet& a) {
        EpsilonJet r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend EpsilonJet operator+(const EpsilonJet& a, const EpsilonJet& b) {
        const int m = join_mod(a, b);
        EpsilonJet r(m);
        for (int i = 0; i < m; ++i) {
            if (i < a.modulus()) r.c_[static_cast<std::size_t>(i)] += a[i];
            if (i < b.modulus()) r.c_[static_cast<std::size_t>(i)] += b[i];
        }
        return r;
    }

    friend EpsilonJet operator-(const EpsilonJet& a, const EpsilonJet& b) { return a + (-b); }

    friend EpsilonJet operator*(const EpsilonJet& a, const EpsilonJet& b) {
        const int m = join_mod(a, b);
        EpsilonJet r(m);
        for (int i = 0; i < a.modulus() && i < m; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < b.modulus() && i + j < m; ++j)
                r.c_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
        return r;
    }

    friend bool operator==(const EpsilonJet& a, const EpsilonJet& b) {
        const int m = std::max(a.modulus(), b.modulus());
        for (int i = 0; i < m; ++i) {
            Rat av = i < a.modulus() ? a[i] : Rat(0);
            Rat bv = i < b.modulus() ? b[i] : Rat(0);
            if (av != bv) return false;
        }
        return true;
    }

    // Multiplicative inverse; requires the constant term to be nonzero.
    friend EpsilonJet ring_inverse(const EpsilonJet& a) {
        if (is_zero(a[0])) throw zero_leading_error();
        const int m = a.modulus();
        EpsilonJet r(m);
        Rat inv0 = Rat(1) / a[0];
        r.c_[0] = inv0;
        for (int k = 1; k < m; ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
            r.c_[static_cast<std::size_t>(k)] = -inv0 * acc;
        }
        return r;
    }

    friend EpsilonJet scale_by_rat(const EpsilonJet& a, const Rat& s) {
        EpsilonJet r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

private:
    static int check_mod(int m) {
        if (m < 1) throw precondition_error("EpsilonJet modulus must be >= 1");
        return m;
    }
    // modulus-1 jets are plain rationals and adopt the partner's modulus
    static int join_mod(const EpsilonJet& a, const EpsilonJet& b) {
        if (a.modulus() == b.modulus()) return a.modulus();
        if (a.modulus() == 1 || b.modulus() == 1) return std::max(a.modulus(), b.modulus());
        throw precondition_error("EpsilonJet modulus mismatch");
    }

    std::vector<Rat> c_;
};

} // namespace pfk
