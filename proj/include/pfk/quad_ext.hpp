#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "pfk/errors.hpp"
#include "pfk/rational.hpp"

namespace pfk {

// Defining data of a multi-quadratic algebra Q[s_1..s_k]/(s_i^2 = c_i).
struct QuadCtx {
    std::vector<Rat> squares; // c_i = s_i^2
    int symbols() const { return static_cast<int>(squares.size()); }
};

using QuadCtxPtr = std::shared_ptr<const QuadCtx>;

// Element of the multi-quadratic algebra, stored as one rational component
// per subset of the adjoined square roots (bitmask index).  An element with
// a null context is a plain rational and mixes freely with any context.
class QuadExt {
public:
    QuadExt() : comp_(1, Rat(0)) {}
    explicit QuadExt(Rat r) : comp_(1, std::move(r)) {}
    QuadExt(QuadCtxPtr ctx, std::vector<Rat> comps) : ctx_(std::move(ctx)), comp_(std::move(comps)) {
        if (ctx_ && comp_.size() != (std::size_t(1) << ctx_->symbols()))
            throw precondition_error("QuadExt component count does not match context");
    }

    static QuadExt symbol(const QuadCtxPtr& ctx, int i) {
        std::vector<Rat> c(std::size_t(1) << ctx->symbols(), Rat(0));
        c[std::size_t(1) << i] = 1;
        return QuadExt(ctx, std::move(c));
    }

    const QuadCtxPtr& ctx() const { return ctx_; }
    const std::vector<Rat>& comps() const { return comp_; }

    const Rat& component(std::size_t mask) const {
        if (mask < comp_.size()) return comp_[mask];
        static const Rat zero(0);
        return zero;
    }

    bool is_zero_elem() const {
        for (const auto& v : comp_)
            if (!is_zero(v)) return false;
        return true;
    }

    // True when every component attached to a non-empty subset vanishes.
    bool is_rational() const {
        for (std::size_t m = 1; m < comp_.size(); ++m)
            if (!is_zero(comp_[m])) return false;
        return true;
    }

    const Rat& rational_part() const { return comp_[0]; }

    friend QuadExt operator-(const QuadExt& a) {
        QuadExt r = a;
        for (auto& v : r.comp_) v = -v;
        return r;
    }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        QuadCtxPtr ctx = join(a, b);
        QuadExt r = lift(a, ctx);
        const QuadExt bb = lift(b, ctx);
        for (std::size_t m = 0; m < r.comp_.size(); ++m) r.comp_[m] += bb.comp_[m];
        return r;
    }

    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        QuadCtxPtr ctx = join(a, b);
        const QuadExt aa = lift(a, ctx), bb = lift(b, ctx);
        QuadExt r = lift(QuadExt(Rat(0)), ctx);
        const std::size_t n = aa.comp_.size();
        for (std::size_t s = 0; s < n; ++s) {
            if (is_zero(aa.comp_[s])) continue;
            for (std::size_t t = 0; t < n; ++t) {
                if (is_zero(bb.comp_[t])) continue;
                Rat v = aa.comp_[s] * bb.comp_[t];
                std::size_t common = s & t;
                if (common && ctx) {
                    for (int i = 0; i < ctx->symbols(); ++i)
                        if (common & (std::size_t(1) << i)) v *= ctx->squares[std::size_t(i)];
                }
                r.comp_[s ^ t] += v;
            }
        }
        return r;
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        QuadCtxPtr ctx = join(a, b);
        return lift(a, ctx).comp_ == lift(b, ctx).comp_;
    }

    friend QuadExt scale_by_rat(const QuadExt& a, const Rat& s) {
        QuadExt r = a;
        for (auto& v : r.comp_) v *= s;
        return r;
    }

    // Numeric shadow: evaluate at floating approximations of the sqrt symbols.
    double eval_double() const {
        double acc = 0;
        for (std::size_t m = 0; m < comp_.size(); ++m) {
            if (is_zero(comp_[m])) continue;
            double v = comp_[m].get_d();
            if (ctx_) {
                for (int i = 0; i < ctx_->symbols(); ++i)
                    if (m & (std::size_t(1) << i)) v *= std::sqrt(ctx_->squares[std::size_t(i)].get_d());
            }
            acc += v;
        }
        return acc;
    }

private:
    static QuadCtxPtr join(const QuadExt& a, const QuadExt& b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
            throw precondition_error("QuadExt context mismatch");
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }
    static QuadExt lift(const QuadExt& a, const QuadCtxPtr& ctx) {
        if (a.ctx_ == ctx) return a;
        QuadExt r;
        r.ctx_ = ctx;
        r.comp_.assign(ctx ? (std::size_t(1) << ctx->symbols()) : 1, Rat(0));
        r.comp_[0] = a.comp_[0]; // a had no context: plain rational
        return r;
    }

    QuadCtxPtr ctx_;
    std::vector<Rat> comp_;
};

} // namespace pfk
