#ifndef IRRSPEC_POLY_HPP
#define IRRSPEC_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace irrspec {

/// Degree reported for the zero polynomial. It is a sentinel only; callers
/// test `is_zero()` before doing arithmetic with degrees.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/// Dense univariate polynomial over F_q, coefficients lowest degree first.
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
class Poly {
   public:
    explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const FieldCtx& ctx, FieldElem c) { return Poly(ctx, {c}); }
    static Poly monomial(const FieldCtx& ctx, FieldElem c, std::size_t e) {
        std::vector<FieldElem> v(e + 1, ctx.zero());
        v[e] = c;
        return Poly(ctx, std::move(v));
    }
    static Poly x(const FieldCtx& ctx) { return monomial(ctx, ctx.one(), 1); }
    static Poly one(const FieldCtx& ctx) { return constant(ctx, ctx.one()); }
    /// Builds from small integers, lowest degree first; handy in tests.
    static Poly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs) {
        std::vector<FieldElem> v;
        v.reserve(coeffs.size());
        for (auto c : coeffs) v.push_back(ctx.from_int(c));
        return Poly(ctx, std::move(v));
    }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kDegreeNegInf : static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    FieldElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : FieldElem{0}; }
    FieldElem lead() const noexcept { return c_.empty() ? FieldElem{0} : c_.back(); }
    std::span<const FieldElem> coeffs() const noexcept { return c_; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == ctx_.one(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == ctx_.one(); }

    FieldElem eval(FieldElem a) const noexcept {
        FieldElem r = ctx_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = ctx_.add(ctx_.mul(r, a), c_[i]);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

    /// Total order: by degree, then coefficients from the top down.
    friend bool operator<(const Poly& a, const Poly& b) noexcept {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    std::vector<FieldElem>& raw() noexcept { return c_; }
    void trim() noexcept {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }

   private:
    FieldCtx ctx_;
    std::vector<FieldElem> c_;
};

inline void require_same_ctx(const Poly& a, const Poly& b) {
    if (!(a.ctx() == b.ctx())) fail(Errc::CtxMismatch, "polynomials over different fields");
}

inline Poly operator+(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    const auto& F = a.ctx();
    std::vector<FieldElem> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(r));
}

inline Poly operator-(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    const auto& F = a.ctx();
    std::vector<FieldElem> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(r));
}

inline Poly operator-(const Poly& a) {
    const auto& F = a.ctx();
    std::vector<FieldElem> r(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : r) c = F.neg(c);
    return Poly(F, std::move(r));
}

inline Poly operator*(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    const auto& F = a.ctx();
    if (a.is_zero() || b.is_zero()) return Poly(F);
    std::vector<FieldElem> r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const FieldElem ai = a.coeff(i);
        if (ai.v == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(ai, b.coeff(j)));
    }
    return Poly(F, std::move(r));
}

inline Poly scale(const Poly& a, FieldElem s) {
    const auto& F = a.ctx();
    std::vector<FieldElem> r(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : r) c = F.mul(c, s);
    return Poly(F, std::move(r));
}

inline Poly monic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, a.ctx().inv(a.lead()));
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    if (b.is_zero()) fail(Errc::ZeroModulus, "division by the zero polynomial");
    const auto& F = a.ctx();
    if (a.size() < b.size()) return {Poly(F), a};
    std::vector<FieldElem> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<FieldElem> quo(a.size() - b.size() + 1, F.zero());
    const FieldElem inv_lead = F.inv(b.lead());
    const std::size_t db = b.size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].v == 0) continue;
        const FieldElem c = F.mul(rem[i], inv_lead);
        quo[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeff(j)));
    }
    rem.resize(db);
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

inline Poly derivative(const Poly& a) {
    const auto& F = a.ctx();
    if (a.size() <= 1) return Poly(F);
    std::vector<FieldElem> r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), a.coeff(i));
    return Poly(F, std::move(r));
}

/// Monic gcd; gcd(f, 0) = monic(f) and gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    require_same_ctx(a, b);
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return monic(a);
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

/// base^e mod m by square-and-multiply; m must have degree >= 1.
inline Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    require_same_ctx(base, m);
    if (m.is_zero() || m.degree() < 1) fail(Errc::ZeroModulus, "powmod needs a modulus of degree >= 1");
    Poly result = Poly::one(m.ctx()) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) result = mulmod(result, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return result;
}

/// f(g) by Horner's rule.
inline Poly compose(const Poly& f, const Poly& g) {
    require_same_ctx(f, g);
    const auto& F = f.ctx();
    Poly r(F);
    for (std::size_t i = f.size(); i-- > 0;) r = r * g + Poly::constant(F, f.coeff(i));
    return r;
}

/// Squarefree test via gcd with the derivative. Constants count as separable.
inline bool is_separable(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.degree() < 1) return true;
    return gcd(f, derivative(f)).degree() == 0;
}

}  // namespace irrspec

#endif  // IRRSPEC_POLY_HPP
