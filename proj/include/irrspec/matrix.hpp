#ifndef IRRSPEC_MATRIX_HPP
#define IRRSPEC_MATRIX_HPP

#include <vector>

#include "error.hpp"
#include "poly.hpp"

namespace irrspec {

/// Square matrix over F_q, row-major.
class Matrix {
   public:
    Matrix(FieldCtx ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n), a_(n * n, FieldElem{0}) {}

    static Matrix identity(const FieldCtx& ctx, std::size_t n) {
        Matrix m(ctx, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
        return m;
    }
    /// Companion matrix of a monic polynomial; its characteristic polynomial is f.
    static Matrix companion(const Poly& f) {
        if (!f.is_monic() || f.degree() < 1) fail(Errc::InvalidArgument, "companion matrix needs a monic nonconstant polynomial");
        const auto& F = f.ctx();
        const auto n = static_cast<std::size_t>(f.degree());
        Matrix m(F, n);
        for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = F.one();
        for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = F.neg(f.coeff(i));
        return m;
    }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    std::size_t size() const noexcept { return n_; }
    FieldElem& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
    FieldElem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

    bool is_symmetric() const noexcept {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_ || !(a.ctx_ == b.ctx_)) fail(Errc::InvalidArgument, "matrix shape or field mismatch");
        const auto& F = a.ctx_;
        Matrix r(F, a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const FieldElem aik = a(i, k);
                if (aik.v == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r(i, j) = F.add(r(i, j), F.mul(aik, b(k, j)));
            }
        return r;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    FieldCtx ctx_;
    std::size_t n_;
    std::vector<FieldElem> a_;
};

/// det(X I - M) by Berkowitz's algorithm. Only ring operations are used, so
/// the result is valid in every characteristic.
inline Poly charpoly(const Matrix& m) {
    const auto& F = m.ctx();
    const std::size_t n = m.size();
    if (n == 0) return Poly::one(F);

    // coeffs holds the characteristic polynomial of the leading r x r block,
    // highest degree first.
    std::vector<FieldElem> coeffs{F.one(), F.neg(m(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        // Column t of the Toeplitz factor: 1, -a_rr, -R A^k S for k = 0..r-1,
        // where R is row r and S column r restricted to the leading block A.
        std::vector<FieldElem> t(r + 2, F.zero());
        t[0] = F.one();
        t[1] = F.neg(m(r, r));
        std::vector<FieldElem> v(r);  // A^k S
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            FieldElem dot = F.zero();
            for (std::size_t i = 0; i < r; ++i) dot = F.add(dot, F.mul(m(r, i), v[i]));
            t[k + 2] = F.neg(dot);
            if (k + 1 < r) {
                std::vector<FieldElem> next(r, F.zero());
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) next[i] = F.add(next[i], F.mul(m(i, j), v[j]));
                v = std::move(next);
            }
        }
        std::vector<FieldElem> out(r + 2, F.zero());
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] = F.add(out[i], F.mul(t[i - j], coeffs[j]));
        coeffs = std::move(out);
    }
    std::vector<FieldElem> low_first(coeffs.rbegin(), coeffs.rend());
    return Poly(F, std::move(low_first));
}

inline FieldElem determinant(const Matrix& m) {
    const auto& F = m.ctx();
    const FieldElem c0 = charpoly(m).coeff(0);
    return m.size() % 2 ? F.neg(c0) : c0;
}

}  // namespace irrspec

#endif  // IRRSPEC_MATRIX_HPP
