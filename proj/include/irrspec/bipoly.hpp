#ifndef IRRSPEC_BIPOLY_HPP
#define IRRSPEC_BIPOLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly.hpp"

namespace irrspec {

/// Polynomial in F_q[T][X]: coefficient i is the Poly in T multiplying X^i.
/// The top X-coefficient is nonzero unless the polynomial is zero.
class BiPoly {
   public:
    explicit BiPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    BiPoly(FieldCtx ctx, std::vector<Poly> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        for (const auto& c : c_)
            if (!(c.ctx() == ctx_)) fail(Errc::CtxMismatch, "bivariate coefficient over another field");
        trim();
    }
    /// Polynomial in X alone (constant in T).
    static BiPoly from_x(const Poly& f) {
        std::vector<Poly> c;
        for (auto a : f.coeffs()) c.push_back(Poly::constant(f.ctx(), a));
        return BiPoly(f.ctx(), std::move(c));
    }
    /// Polynomial in T alone.
    static BiPoly from_t(const Poly& f) { return BiPoly(f.ctx(), {f}); }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree_x() const noexcept { return c_.empty() ? kDegreeNegInf : static_cast<int>(c_.size()) - 1; }
    int degree_t() const noexcept {
        int d = kDegreeNegInf;
        for (const auto& c : c_) d = std::max(d, c.degree());
        return d;
    }
    int total_degree() const noexcept {
        int d = kDegreeNegInf;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) d = std::max(d, c_[i].degree() + static_cast<int>(i));
        return d;
    }
    Poly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Poly(ctx_); }
    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    /// Coefficient of T^i X^j.
    FieldElem at(std::size_t i, std::size_t j) const noexcept {
        return j < c_.size() ? c_[j].coeff(i) : FieldElem{0};
    }

    /// Same polynomial with the roles of T and X exchanged.
    BiPoly swapped() const {
        const int dt = degree_t();
        if (is_zero()) return *this;
        std::vector<Poly> out;
        for (int i = 0; i <= dt; ++i) {
            std::vector<FieldElem> row(c_.size());
            for (std::size_t j = 0; j < c_.size(); ++j) row[j] = c_[j].coeff(static_cast<std::size_t>(i));
            out.emplace_back(ctx_, std::move(row));
        }
        return BiPoly(ctx_, std::move(out));
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldCtx ctx_;
    std::vector<Poly> c_;
};

inline BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<Poly> r;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) r.push_back(a.coeff(i) + b.coeff(i));
    return BiPoly(a.ctx(), std::move(r));
}

inline BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    std::vector<Poly> r;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) r.push_back(a.coeff(i) - b.coeff(i));
    return BiPoly(a.ctx(), std::move(r));
}

inline BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly(a.ctx());
    std::vector<Poly> r(a.size() + b.size() - 1, Poly(a.ctx()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a.coeff(i) * b.coeff(j);
    return BiPoly(a.ctx(), std::move(r));
}

/// Result of the specialization T -> a.
struct Specialization {
    Poly poly;
    bool degree_dropped = false;
    bool separable = false;

    /// Degree preserved and separable: the specialization is usable.
    bool accepted() const noexcept { return !degree_dropped && separable; }
};

inline Specialization eval_partial(const BiPoly& f, FieldElem a) {
    std::vector<FieldElem> c;
    c.reserve(f.size());
    for (const auto& t : f.coeffs()) c.push_back(t.eval(a));
    Specialization s{Poly(f.ctx(), std::move(c))};
    s.degree_dropped = s.poly.degree() != f.degree_x();
    s.separable = !s.poly.is_zero() && s.poly.degree() >= 1 && is_separable(s.poly);
    return s;
}

/// f(T, a*T + b) as a polynomial in T.
inline Poly substitute_line(const BiPoly& f, FieldElem a, FieldElem b) {
    const auto& F = f.ctx();
    const Poly line(F, {b, a});
    Poly r(F);
    for (std::size_t j = f.size(); j-- > 0;) r = r * line + f.coeff(j);
    return r;
}

/// Resultant over F_q with Res(f, g) = lc(f)^{deg g} prod_{f(x)=0} g(x),
/// computed by the Euclidean remainder sequence.
inline FieldElem resultant(const Poly& f, const Poly& g) {
    require_same_ctx(f, g);
    const auto& F = f.ctx();
    if (f.is_zero() || g.is_zero()) fail(Errc::ZeroInput, "resultant with the zero polynomial");
    FieldElem acc = F.one();
    Poly a = f, b = g;
    for (;;) {
        const auto da = static_cast<unsigned>(a.degree());
        const auto db = static_cast<unsigned>(b.degree());
        if (da == 0) return F.mul(acc, F.pow(a.lead(), db));
        if (db == 0) return F.mul(acc, F.pow(b.lead(), da));
        Poly r = a % b;
        if (r.is_zero()) return F.zero();
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        const auto dr = static_cast<unsigned>(r.degree());
        if ((da & 1) && (db & 1)) acc = F.neg(acc);
        acc = F.mul(acc, F.pow(b.lead(), da - dr));
        a = std::move(b);
        b = std::move(r);
    }
}

enum class Var { T, X };

namespace detail {

inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(Errc::InternalError, "inexact division in subresultant sequence");
    return q;
}

inline Poly poly_pow(const Poly& a, unsigned e) {
    Poly r = Poly::one(a.ctx());
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

// lc(b)^{deg a - deg b + 1} a = q b + r with deg_X r < deg_X b, over F_q[T].
inline BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
    const auto& F = a.ctx();
    std::vector<Poly> r(a.coeffs());
    const std::size_t db = b.size() - 1;
    const Poly& lb = b.coeffs().back();
    int steps = static_cast<int>(a.size()) - static_cast<int>(db);
    std::size_t top = r.size();
    while (top > db) {
        const Poly lead = r[top - 1];
        const std::size_t shift = top - 1 - db;
        for (std::size_t i = 0; i < top; ++i) r[i] = r[i] * lb;
        for (std::size_t i = 0; i <= db; ++i) r[shift + i] = r[shift + i] - lead * b.coeff(i);
        --top;
        --steps;
        while (top > 0 && r[top - 1].is_zero()) --top;
    }
    // Remaining multiplications so the total power of lc(b) is deg a - deg b + 1.
    Poly extra = poly_pow(lb, static_cast<unsigned>(std::max(steps, 0)));
    r.resize(top, Poly(F));
    for (auto& c : r) c = c * extra;
    return BiPoly(F, std::move(r));
}

// Subresultant PRS over the integral domain F_q[T], eliminating X.
inline Poly subresultant_x(BiPoly a, BiPoly b) {
    const FieldCtx F = a.ctx();
    if (a.is_zero() || b.is_zero()) fail(Errc::ZeroInput, "resultant with the zero polynomial");
    int sign = 1;
    if (a.degree_x() < b.degree_x()) {
        if ((a.degree_x() & 1) && (b.degree_x() & 1)) sign = -sign;
        std::swap(a, b);
    }
    auto finish = [&](const Poly& r) { return sign < 0 ? -r : r; };
    if (b.degree_x() == 0) return finish(poly_pow(b.coeff(0), static_cast<unsigned>(a.degree_x())));

    Poly g = Poly::one(F), h = Poly::one(F);
    for (;;) {
        const int da = a.degree_x(), db = b.degree_x();
        const unsigned delta = static_cast<unsigned>(da - db);
        if ((da & 1) && (db & 1)) sign = -sign;
        BiPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return Poly(F);
        const Poly divisor = g * poly_pow(h, delta);
        std::vector<Poly> rc;
        for (const auto& c : r.coeffs()) rc.push_back(exact_div(c, divisor));
        a = std::move(b);
        b = BiPoly(F, std::move(rc));
        g = a.coeffs().back();
        // h <- g^delta / h^{delta-1}
        if (delta >= 1) h = exact_div(poly_pow(g, delta), poly_pow(h, delta - 1));
        if (b.degree_x() == 0) {
            const unsigned dA = static_cast<unsigned>(a.degree_x());
            const Poly lb = b.coeff(0);
            // h <- lc(b)^{deg a} / h^{deg a - 1}
            return finish(exact_div(poly_pow(lb, dA), poly_pow(h, dA - 1)));
        }
    }
}

}  // namespace detail

/// Resultant of two bivariate polynomials with respect to `eliminate`,
/// returned as a polynomial in the remaining variable. Uses the subresultant
/// PRS over F_q[other variable]; same sign convention as the univariate case.
inline Poly resultant(const BiPoly& f, const BiPoly& g, Var eliminate) {
    if (!(f.ctx() == g.ctx())) fail(Errc::CtxMismatch, "bivariate polynomials over different fields");
    if (eliminate == Var::X) return detail::subresultant_x(f, g);
    return detail::subresultant_x(f.swapped(), g.swapped());
}

}  // namespace irrspec

#endif  // IRRSPEC_BIPOLY_HPP
