#ifndef IRRSPEC_EXPLAB_SMOOTH_HPP
#define IRRSPEC_EXPLAB_SMOOTH_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../bipoly.hpp"
#include "../error.hpp"
#include "../factor.hpp"
#include "../poly.hpp"

namespace irrspec::explab {

enum class Smoothness { Smooth, Singular, Inconclusive };

inline std::string to_string(Smoothness s) {
    switch (s) {
        case Smoothness::Smooth: return "smooth";
        case Smoothness::Singular: return "singular";
        case Smoothness::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct SmoothResult {
    Smoothness status = Smoothness::Inconclusive;
    std::optional<std::array<FieldElem, 3>> witness;  // (T:X:Z) when F_q-rational
    std::string note;
};

namespace detail {

using Exps = std::array<unsigned, 3>;  // exponents of T, X, Z
using Homog = std::map<Exps, FieldElem>;

inline Homog homogenize(const BiPoly& f, unsigned d) {
    Homog h;
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t i = 0; i < f.coeff(j).size(); ++i) {
            const FieldElem c = f.at(i, j);
            if (c.v != 0) h[{static_cast<unsigned>(i), static_cast<unsigned>(j), d - static_cast<unsigned>(i + j)}] = c;
        }
    return h;
}

inline Homog partial(const FieldCtx& F, const Homog& g, int var) {
    Homog out;
    for (const auto& [e, c] : g) {
        if (e[var] == 0) continue;
        const FieldElem k = F.mul(c, F.from_int(e[var]));
        if (k.v == 0) continue;
        Exps e2 = e;
        --e2[var];
        out[e2] = k;
    }
    return out;
}

// Dehomogenize with variable `fixed` = 1; `u` plays the role of T and `v` of X.
inline BiPoly patch(const FieldCtx& F, const Homog& g, int u, int v) {
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& [e, c] : g) {
        if (rows.size() <= e[v]) rows.resize(e[v] + 1);
        auto& r = rows[e[v]];
        if (r.size() <= e[u]) r.resize(e[u] + 1, FieldElem{0});
        r[e[u]] = F.add(r[e[u]], c);
    }
    std::vector<Poly> cs;
    for (auto& r : rows) cs.emplace_back(F, std::move(r));
    return BiPoly(F, std::move(cs));
}

// Arithmetic in K = F_q[u]/(phi), phi irreducible.
struct Residue {
    Poly phi;

    Poly reduce(const Poly& a) const { return a % phi; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % phi; }
    Poly inv(const Poly& a) const {
        Poly r0 = phi, r1 = reduce(a);
        Poly s0(phi.ctx()), s1 = Poly::one(phi.ctx());
        if (r1.is_zero()) fail(Errc::InternalError, "inverse of zero in residue field");
        while (!r1.is_zero()) {
            auto [qt, rm] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rm);
            Poly s2 = s0 - qt * s1;
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant
        const FieldElem c = phi.ctx().inv(r0.coeff(0));
        return reduce(scale(s0, c));
    }
};

using KPoly = std::vector<Poly>;  // coefficients in K, low degree first

inline void ktrim(KPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline KPoly kmod(KPoly a, const KPoly& b, const Residue& K) {
    ktrim(a);
    const Poly lead_inv = K.inv(b.back());
    while (a.size() >= b.size()) {
        const Poly c = K.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = K.reduce(a[shift + i] - c * b[i]);
        ktrim(a);
    }
    return a;
}

inline KPoly kgcd(KPoly a, KPoly b, const Residue& K) {
    ktrim(a);
    ktrim(b);
    while (!b.empty()) {
        KPoly r = kmod(a, b, K);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline KPoly kspecialize(const BiPoly& f, const Residue& K) {
    KPoly out;
    for (const auto& c : f.coeffs()) out.push_back(K.reduce(c));
    ktrim(out);
    return out;
}

}  // namespace detail

/// Smoothness of the projective closure of F(T, X) = 0 over the algebraic
/// closure. Singular points are the common zeros of the three partials of the
/// homogenization G(T, X, Z). Each affine patch eliminates one coordinate by
/// resultants; every root of the eliminant is tested by a gcd over its
/// residue field.
inline SmoothResult smooth_check(const BiPoly& f) {
    const auto& F = f.ctx();
    if (f.is_zero()) fail(Errc::ZeroInput, "zero polynomial");
    const int dt = f.total_degree();
    if (dt < 1) fail(Errc::ConstantInput, "constant polynomial");
    const auto d = static_cast<unsigned>(dt);
    if (d % F.p() == 0) fail(Errc::PreconditionFailed, "characteristic divides the degree");
    SmoothResult res;
    if (d == 1) {
        res.status = Smoothness::Smooth;
        return res;
    }
    const auto G = detail::homogenize(f, d);
    std::vector<detail::Homog> partials;
    for (int var = 0; var < 3; ++var) {
        auto p = detail::partial(F, G, var);
        if (!p.empty()) partials.push_back(std::move(p));
    }
    if (partials.size() < 2) {
        res.status = Smoothness::Singular;
        res.note = "a single nonzero partial vanishes along a curve";
        return res;
    }
    // (fixed, u, v) with fixed coordinate set to 1
    constexpr std::array<std::array<int, 3>, 3> patches{{{2, 0, 1}, {1, 0, 2}, {0, 1, 2}}};
    bool any_inconclusive = false;
    for (const auto& [fixed, u, v] : patches) {
        std::vector<BiPoly> ps;
        for (const auto& g : partials) ps.push_back(detail::patch(F, g, u, v));
        Poly elim(F);
        bool have = false;
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                if (ps[i].is_zero() || ps[j].is_zero()) continue;
                Poly r = ps[i].degree_x() == 0 && ps[j].degree_x() == 0 ? gcd(ps[i].coeff(0), ps[j].coeff(0))
                                                                          : resultant(ps[i], ps[j], Var::X);
                if (r.is_zero()) continue;
                elim = have ? gcd(elim, r) : r;
                have = true;
            }
        if (!have) {
            any_inconclusive = true;
            continue;
        }
        if (elim.degree() < 1) continue;
        for (const auto& [phi, mult] : factor(elim).factors) {
            (void)mult;
            const detail::Residue K{phi};
            std::vector<detail::KPoly> ks;
            for (const auto& p : ps) {
                auto k = detail::kspecialize(p, K);
                if (!k.empty()) ks.push_back(std::move(k));
            }
            detail::KPoly g;
            for (const auto& k : ks) g = detail::kgcd(g, k, K);
            if (!ks.empty() && g.size() < 2) continue;
            res.status = Smoothness::Singular;
            res.note = ks.empty() ? "partials vanish on a whole line" : "common zero of the partials";
            if (phi.degree() == 1 && g.size() >= 2) {
                const FieldElem u0 = F.neg(phi.coeff(0));
                std::vector<FieldElem> gc;
                for (const auto& c : g) gc.push_back(c.coeff(0));
                for (const auto& [h, hm] : factor(Poly(F, gc)).factors) {
                    (void)hm;
                    if (h.degree() != 1) continue;
                    std::array<FieldElem, 3> w{};
                    w[fixed] = F.one();
                    w[u] = u0;
                    w[v] = F.neg(h.coeff(0));
                    res.witness = w;
                    break;
                }
            }
            return res;
        }
    }
    if (any_inconclusive) {
        res.status = Smoothness::Inconclusive;
        res.note = "every resultant on some patch vanishes identically";
        return res;
    }
    res.status = Smoothness::Smooth;
    return res;
}

}  // namespace irrspec::explab

#endif  // IRRSPEC_EXPLAB_SMOOTH_HPP
