#ifndef IRRSPEC_TESTS_ORACLES_HPP
#define IRRSPEC_TESTS_ORACLES_HPP

// Brute-force reference routines used only by the tests. They share no code
// path with the library algorithms they check: polynomials are enumerated,
// divided by trial and evaluated pointwise.

#include <irrspec/factor.hpp>
#include <irrspec/field.hpp>
#include <irrspec/matrix.hpp>
#include <irrspec/perm.hpp>
#include <irrspec/poly.hpp>

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

using namespace irrspec;

/// All monic polynomials of degree d over ctx, in counter order.
inline std::vector<Poly> monic_polys(const FieldCtx& ctx, unsigned d) {
    std::vector<Poly> out;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= ctx.q();
    for (std::uint64_t c = 0; c < total; ++c) {
        std::vector<FieldElem> v(d + 1);
        std::uint64_t x = c;
        for (unsigned i = 0; i < d; ++i) {
            v[i] = ctx.element(x % ctx.q());
            x /= ctx.q();
        }
        v[d] = ctx.one();
        out.emplace_back(ctx, std::move(v));
    }
    return out;
}

/// Long division remainder, written independently of the library divmod.
inline std::vector<FieldElem> trial_remainder(const FieldCtx& F, std::vector<FieldElem> a, const Poly& monic_b) {
    const std::size_t db = monic_b.size() - 1;
    while (!a.empty() && a.back().v == 0) a.pop_back();
    while (a.size() > db) {
        const FieldElem c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, monic_b.coeff(i)));
        while (!a.empty() && a.back().v == 0) a.pop_back();
    }
    return a;
}

inline bool divides(const Poly& monic_b, const Poly& a) {
    std::vector<FieldElem> v(a.coeffs().begin(), a.coeffs().end());
    return trial_remainder(a.ctx(), v, monic_b).empty();
}

/// Irreducible iff no monic polynomial of degree 1..deg/2 divides it.
inline bool brute_irreducible(const Poly& f) {
    const unsigned n = static_cast<unsigned>(f.degree());
    for (unsigned d = 1; d <= n / 2; ++d)
        for (const auto& g : monic_polys(f.ctx(), d))
            if (divides(g, f)) return false;
    return n >= 1;
}

/// Monic irreducible factors with multiplicity by repeated trial division,
/// smallest degree first.
inline std::vector<std::pair<Poly, unsigned>> trial_factor(const Poly& f) {
    const auto& F = f.ctx();
    std::vector<std::pair<Poly, unsigned>> out;
    std::vector<FieldElem> rest(f.coeffs().begin(), f.coeffs().end());
    const FieldElem inv = F.inv(rest.back());
    for (auto& c : rest) c = F.mul(c, inv);
    auto deg = [&] { return static_cast<int>(rest.size()) - 1; };
    for (unsigned d = 1; static_cast<int>(2 * d) <= deg(); ++d) {
        for (const auto& g : monic_polys(F, d)) {
            if (!brute_irreducible(g)) continue;
            unsigned mult = 0;
            for (;;) {
                if (!trial_remainder(F, rest, g).empty()) break;
                // exact quotient by schoolbook division
                std::vector<FieldElem> quo(rest.size() - d, F.zero());
                auto r = rest;
                for (std::size_t i = r.size(); i-- > d;) {
                    const FieldElem c = r[i];
                    quo[i - d] = c;
                    for (std::size_t j = 0; j <= d; ++j) r[i - d + j] = F.sub(r[i - d + j], F.mul(c, g.coeff(j)));
                }
                rest = quo;
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
        }
    }
    if (deg() >= 1) {
        Poly r(F, rest);
        bool merged = false;
        for (auto& [g, m] : out)
            if (g == r) {
                ++m;
                merged = true;
            }
        if (!merged) out.emplace_back(r, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// Determinant of (X I - M) by Laplace expansion over F_q[X].
inline Poly laplace_charpoly(const Matrix& m) {
    const auto& F = m.ctx();
    const std::size_t n = m.size();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(F)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Poly::constant(F, F.neg(m(i, j)));
            if (i == j) a[i][j] = a[i][j] + Poly::x(F);
        }
    std::function<Poly(const std::vector<std::vector<Poly>>&)> det = [&](const std::vector<std::vector<Poly>>& b) {
        const std::size_t k = b.size();
        if (k == 1) return b[0][0];
        Poly sum(F);
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<std::vector<Poly>> minor;
            for (std::size_t i = 1; i < k; ++i) {
                std::vector<Poly> row;
                for (std::size_t j = 0; j < k; ++j)
                    if (j != c) row.push_back(b[i][j]);
                minor.push_back(row);
            }
            const Poly term = b[0][c] * det(minor);
            sum = (c % 2) ? sum - term : sum + term;
        }
        return sum;
    };
    return det(a);
}

/// Orbit lengths of <g> restricted to each block, found by iterating g.
inline bool brute_transitive_on_blocks(const Perm& g, const std::vector<std::vector<Point>>& blocks) {
    for (const auto& b : blocks) {
        std::vector<Point> seen{b.front()};
        Point y = g[b.front()];
        while (y != b.front()) {
            seen.push_back(y);
            y = g[y];
        }
        std::sort(seen.begin(), seen.end());
        auto sb = b;
        std::sort(sb.begin(), sb.end());
        if (seen != sb) return false;
    }
    return true;
}

}  // namespace oracle

#endif  // IRRSPEC_TESTS_ORACLES_HPP
