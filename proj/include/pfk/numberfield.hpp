#pragma once

#include <memory>
#include <vector>

#include "pfk/errors.hpp"
#include "pfk/polyq.hpp"
#include "pfk/rational.hpp"

namespace pfk {

// Q[alpha]/(minpoly), minpoly monic irreducible over Q (irreducibility is the
// caller's responsibility; arithmetic only needs gcd(minpoly, x) = 1 cases).
struct NFCtx {
    PolyQ minpoly; // monic
    int degree() const { return minpoly.degree(); }
};

using NFCtxPtr = std::shared_ptr<const NFCtx>;

// Element of the number field; a null context means a plain rational, which
// mixes freely with any context (same convention as QuadExt).
class NFElem {
public:
    NFElem() : c_(1, Rat(0)) {}
    explicit NFElem(Rat r) : c_(1, std::move(r)) {}
    NFElem(NFCtxPtr ctx, std::vector<Rat> comps) : ctx_(std::move(ctx)), c_(std::move(comps)) {
        reduce();
    }

    static NFElem alpha(const NFCtxPtr& ctx) {
        std::vector<Rat> c(static_cast<std::size_t>(ctx->degree()), Rat(0));
        if (ctx->degree() < 2) throw precondition_error("number field of degree < 2");
        c[1] = 1;
        return NFElem(ctx, std::move(c));
    }

    const NFCtxPtr& ctx() const { return ctx_; }
    const std::vector<Rat>& comps() const { return c_; }

    bool is_zero_elem() const {
        for (const auto& v : c_)
            if (!is_zero(v)) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return false;
        return true;
    }
    const Rat& rational_part() const { return c_[0]; }

    friend NFElem operator-(const NFElem& a) {
        NFElem r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        NFCtxPtr ctx = join(a, b);
        NFElem r = lift(a, ctx);
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }

    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        NFCtxPtr ctx = join(a, b);
        if (!ctx) return NFElem(a.c_[0] * b.c_[0]);
        PolyQ pa(std::vector<Rat>(lift(a, ctx).c_));
        PolyQ pb(std::vector<Rat>(lift(b, ctx).c_));
        PolyQ prod = poly_mod(pa * pb, ctx->minpoly);
        std::vector<Rat> c(static_cast<std::size_t>(ctx->degree()), Rat(0));
        for (int i = 0; i <= prod.degree(); ++i) c[static_cast<std::size_t>(i)] = prod[i];
        return NFElem(ctx, std::move(c));
    }

    friend bool operator==(const NFElem& a, const NFElem& b) {
        NFCtxPtr ctx = join(a, b);
        return lift(a, ctx).c_ == lift(b, ctx).c_;
    }

    friend NFElem ring_inverse(const NFElem& a) {
        if (a.is_zero_elem()) throw precondition_error("number field division by zero");
        if (!a.ctx_) return NFElem(Rat(1) / a.c_[0]);
        // extended Euclid: u * pa + v * minpoly = gcd = 1
        PolyQ r0 = a.ctx_->minpoly, r1(std::vector<Rat>(a.c_));
        PolyQ s0, s1 = PolyQ::constant(Rat(1)); // coefficients of pa
        while (!r1.is_zero_poly() && r1.degree() > 0) {
            PolyQ q, r2;
            poly_divmod(r0, r1, q, r2);
            PolyQ s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.is_zero_poly())
            throw precondition_error("number field element is a zero divisor (reducible minpoly?)");
        // r1 is a nonzero constant: inverse = s1 / r1
        PolyQ inv = poly_mod(s1.scaled(Rat(1) / r1[0]), a.ctx_->minpoly);
        std::vector<Rat> c(static_cast<std::size_t>(a.ctx_->degree()), Rat(0));
        for (int i = 0; i <= inv.degree(); ++i) c[static_cast<std::size_t>(i)] = inv[i];
        return NFElem(a.ctx_, std::move(c));
    }

    friend NFElem scale_by_rat(const NFElem& a, const Rat& s) {
        NFElem r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

private:
    void reduce() {
        if (!ctx_) {
            if (c_.size() != 1) throw precondition_error("rational NFElem must have one component");
            return;
        }
        if (static_cast<int>(c_.size()) != ctx_->degree())
            throw precondition_error("NFElem component count != field degree");
    }

    static NFCtxPtr join(const NFElem& a, const NFElem& b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
            throw precondition_error("NFElem context mismatch");
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }
    static NFElem lift(const NFElem& a, const NFCtxPtr& ctx) {
        if (a.ctx_ == ctx) return a;
        std::vector<Rat> c(ctx ? static_cast<std::size_t>(ctx->degree()) : 1, Rat(0));
        c[0] = a.c_[0];
        return NFElem(ctx, std::move(c));
    }

    NFCtxPtr ctx_;
    std::vector<Rat> c_;
};

} // namespace pfk
