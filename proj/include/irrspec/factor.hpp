#ifndef IRRSPEC_FACTOR_HPP
#define IRRSPEC_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "rng.hpp"

namespace irrspec {

struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducibles, sorted, pairwise distinct

    /// unit * prod factor^multiplicity.
    Poly expand(const FieldCtx& ctx) const {
        Poly r = Poly::constant(ctx, unit);
        for (const auto& [g, m] : factors)
            for (unsigned i = 0; i < m; ++i) r = r * g;
        return r;
    }
};

/// Multiset of irreducible factor degrees, sorted descending, plus whether
/// every multiplicity is one. This is the cycle type of Frobenius on the roots.
struct Shape {
    std::vector<unsigned> degrees;
    bool squarefree = true;

    unsigned total() const noexcept {
        unsigned s = 0;
        for (auto d : degrees) s += d;
        return s;
    }
    friend bool operator==(const Shape&, const Shape&) = default;
};

namespace detail {

inline std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> r;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        r.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) r.push_back(n);
    return r;
}

// Coefficient-wise p-th root of f(X) = g(X^p).
inline Poly pth_root(const Poly& f) {
    const auto& F = f.ctx();
    const std::uint64_t p = F.p();
    std::uint64_t root_exp = 1;
    for (unsigned i = 1; i < F.k(); ++i) root_exp *= p;
    std::vector<FieldElem> g(f.size() / p + 1, F.zero());
    for (std::size_t i = 0; i < f.size(); i += p) g[i / p] = F.pow(f.coeff(i), root_exp);
    return Poly(F, std::move(g));
}

inline Poly frobenius(const Poly& h, const Poly& m) { return powmod(h, m.ctx().q(), m); }

}  // namespace detail

/// Rabin's test: f of degree n is irreducible iff X^{q^n} = X mod f and
/// gcd(X^{q^{n/l}} - X, f) = 1 for every prime l | n.
inline bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.degree() < 1) fail(Errc::ConstantInput, "irreducibility of a constant");
    const Poly m = monic(f);
    const auto n = static_cast<unsigned>(m.degree());
    const Poly x = Poly::x(m.ctx()) % m;
    std::vector<Poly> iter{x};
    iter.reserve(n + 1);
    for (unsigned j = 1; j <= n; ++j) iter.push_back(detail::frobenius(iter.back(), m));
    if (!(iter[n] == x)) return false;
    for (unsigned l : detail::prime_divisors(n))
        if (gcd(iter[n / l] - x, m).degree() != 0) return false;
    return true;
}

/// Squarefree decomposition of a monic polynomial: pairs (g, i) with g
/// squarefree and f = prod g^i.
inline std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    if (f.degree() < 1) return out;
    const unsigned p = static_cast<unsigned>(f.ctx().p());
    const Poly df = derivative(f);
    if (df.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(detail::pth_root(f))) out.emplace_back(std::move(g), m * p);
        return out;
    }
    Poly c = gcd(f, df);
    Poly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(std::move(z), i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() > 0)
        for (auto& [g, m] : squarefree_decomposition(detail::pth_root(c))) out.emplace_back(std::move(g), m * p);
    return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial. Each entry
/// (g, d) is the product of all irreducible factors of degree d.
inline std::vector<std::pair<Poly, unsigned>> distinct_degree_factorization(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const auto& F = f.ctx();
    Poly rest = f;
    Poly h = Poly::x(F) % rest;
    unsigned d = 0;
    while (rest.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = detail::frobenius(h, rest);
        Poly g = gcd(h - Poly::x(F), rest);
        if (g.degree() > 0) {
            rest = rest / g;
            h = h % rest;
            out.emplace_back(std::move(g), d);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

/// Cantor-Zassenhaus splitting of a monic squarefree g whose irreducible
/// factors all have degree d. In characteristic 2 the splitting polynomial is
/// the trace a + a^2 + ... + a^{2^{kd-1}} instead of a^{(q^d-1)/2} - 1.
inline std::vector<Poly> equal_degree_factorization(const Poly& g, unsigned d, Rng& rng) {
    const auto& F = g.ctx();
    const auto n = static_cast<unsigned>(g.degree());
    if (n == d) return {g};
    if (n % d != 0) fail(Errc::InternalError, "equal-degree input has wrong degree");

    for (;;) {
        std::vector<FieldElem> coeffs(n);
        for (auto& c : coeffs) c = F.element(rng.uniform(F.q()));
        const Poly a(F, std::move(coeffs));
        if (a.degree() < 1) continue;

        Poly b(F);
        if (F.p() == 2) {
            b = a;
            Poly t = a;
            for (unsigned i = 1; i < F.k() * d; ++i) {
                t = mulmod(t, t, g);
                b = b + t;
            }
        } else {
            Poly t = a, acc = a;
            for (unsigned i = 1; i < d; ++i) {
                t = detail::frobenius(t, g);
                acc = mulmod(acc, t, g);
            }
            b = powmod(acc, (F.q() - 1) / 2, g) - Poly::one(F);
        }
        Poly s = gcd(b, g);
        if (s.degree() > 0 && s.degree() < g.degree()) {
            auto left = equal_degree_factorization(s, d, rng);
            auto right = equal_degree_factorization(g / s, d, rng);
            left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
            return left;
        }
    }
}

/// Complete factorization into monic irreducibles. The equal-degree stage
/// draws from `rng`; the output is sorted, so it does not depend on the seed.
inline Factorization factor(const Poly& f, Rng& rng) {
    if (f.is_zero()) fail(Errc::ZeroInput, "factor of the zero polynomial");
    Factorization out{f.lead(), {}};
    const Poly m = monic(f);
    for (const auto& [g, mult] : squarefree_decomposition(m))
        for (const auto& [h, d] : distinct_degree_factorization(g))
            for (auto& irr : equal_degree_factorization(h, d, rng)) out.factors.emplace_back(std::move(irr), mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

inline Factorization factor(const Poly& f) {
    Rng rng(0x5eed);
    return factor(f, rng);
}

/// Factor degrees via squarefree and distinct-degree stages only, so no
/// randomness is involved.
inline Shape shape(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroInput, "shape of the zero polynomial");
    if (f.degree() < 1) fail(Errc::ConstantInput, "shape of a constant");
    Shape s;
    for (const auto& [g, mult] : squarefree_decomposition(monic(f))) {
        if (mult > 1) s.squarefree = false;
        for (const auto& [h, d] : distinct_degree_factorization(g)) {
            const unsigned count = static_cast<unsigned>(h.degree()) / d * mult;
            s.degrees.insert(s.degrees.end(), count, d);
        }
    }
    std::sort(s.degrees.begin(), s.degrees.end(), std::greater<>());
    return s;
}

/// Number of monic irreducibles of degree n over F_q: (1/n) sum_{d|n} mu(d) q^{n/d}.
inline std::uint64_t count_irreducible(const FieldCtx& ctx, unsigned n) {
    if (n < 1) fail(Errc::InvalidArgument, "degree must be >= 1");
    auto mobius = [](unsigned d) {
        int mu = 1;
        for (unsigned p = 2; p * p <= d; ++p) {
            if (d % p) continue;
            d /= p;
            if (d % p == 0) return 0;
            mu = -mu;
        }
        return d > 1 ? -mu : mu;
    };
    auto power = [&](unsigned e) {
        __int128 r = 1;
        for (unsigned i = 0; i < e; ++i) {
            r *= ctx.q();
            if (r > (static_cast<__int128>(1) << 100)) fail(Errc::Overflow, "q^n too large");
        }
        return r;
    };
    __int128 sum = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) sum += mobius(d) * power(n / d);
    const __int128 count = sum / n;
    if (count > static_cast<__int128>(UINT64_MAX)) fail(Errc::Overflow, "count exceeds 64 bits");
    return static_cast<std::uint64_t>(count);
}

/// Uniform polynomial of exact degree `deg`; leading coefficient is 1 when
/// `monic_lead`, else uniform over F_q^*.
inline Poly random_poly(const FieldCtx& ctx, unsigned deg, bool monic_lead, Rng& rng) {
    std::vector<FieldElem> c(deg + 1);
    for (unsigned i = 0; i < deg; ++i) c[i] = ctx.element(rng.uniform(ctx.q()));
    c[deg] = monic_lead ? ctx.one() : ctx.element(1 + rng.uniform(ctx.q() - 1));
    return Poly(ctx, std::move(c));
}

}  // namespace irrspec

#endif  // IRRSPEC_FACTOR_HPP
