#ifndef IRRSPEC_FIELD_HPP
#define IRRSPEC_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace irrspec {

/// Element of F_{p^k}. The value packs the coordinate vector (c_0, ..., c_{k-1})
/// over F_p as the base-p integer sum c_i p^i, so v lies in [0, q).
struct FieldElem {
    std::uint32_t v = 0;

    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial helpers over F_p (coefficients low-first, trimmed).
// Used only to find the canonical modulus and build tables; the general
// polynomial layer lives in poly.hpp.
using FpPoly = std::vector<std::uint64_t>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t fp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t inv_lead = fp_pow(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_mod(std::move(r), m, p);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        a = fp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Ben-Or style test: monic f of degree k is irreducible over F_p iff
// gcd(X^{p^j} - X, f) = 1 for every j <= k/2.
inline bool fp_monic_irreducible(const FpPoly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    FpPoly x = fp_mod(FpPoly{0, 1}, f, p);
    FpPoly h = x;
    for (std::size_t j = 1; j <= k / 2; ++j) {
        FpPoly acc{1};
        FpPoly base = h;
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = fp_mulmod(acc, base, f, p);
            base = fp_mulmod(base, base, f, p);
        }
        h = acc;
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        if (diff.empty()) return false;
        if (fp_gcd(diff, f, p).size() > 1) return false;
    }
    return true;
}

struct FieldData {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // over F_p, low-first, monic, degree k
    // Extension fields only: discrete log tables w.r.t. a primitive element.
    std::vector<std::uint32_t> exp;  // exp[i] = g^i for i in [0, 2(q-1))
    std::vector<std::uint32_t> log;  // log[v] for v != 0
    std::vector<std::uint32_t> add_table;  // q*q table for small extension fields
};

}  // namespace detail

/// Context for the finite field F_{p^k}. Cheap to copy; all copies share one
/// immutable table set. Two contexts compare equal iff (p, k) match, which is
/// sound because the modulus is chosen canonically.
class FieldCtx {
   public:
    static constexpr std::uint64_t kMaxPrimeFieldOrder = 0xFFFFFFFFULL;
    static constexpr std::uint64_t kMaxExtensionOrder = 1ULL << 22;
    static constexpr std::uint64_t kAddTableOrder = 256;

    /// Builds F_{p^k} with modulus the lexicographically least monic
    /// irreducible of degree k (coefficients compared from X^{k-1} down).
    static FieldCtx create(std::uint64_t p, unsigned k) {
        if (k < 1) fail(Errc::InvalidArgument, "extension degree must be >= 1");
        if (p < 2 || !detail::is_prime_u64(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (q > kMaxPrimeFieldOrder / p) fail(Errc::Overflow, "field order exceeds 32 bits");
            q *= p;
        }
        if (k > 1 && q > kMaxExtensionOrder)
            fail(Errc::Overflow, "extension field order exceeds " + std::to_string(kMaxExtensionOrder));

        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->k = k;
        d->q = static_cast<std::uint32_t>(q);
        d->modulus = find_modulus(p, k, q);
        if (k > 1) build_tables(*d);
        return FieldCtx(std::move(d));
    }

    std::uint64_t p() const noexcept { return d_->p; }
    unsigned k() const noexcept { return d_->k; }
    std::uint32_t q() const noexcept { return d_->q; }
    bool is_prime_field() const noexcept { return d_->k == 1; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return d_->modulus; }

    FieldElem zero() const noexcept { return {0}; }
    FieldElem one() const noexcept { return {1}; }
    FieldElem element(std::uint64_t index) const {
        if (index >= d_->q) fail(Errc::InvalidArgument, "element index out of range");
        return {static_cast<std::uint32_t>(index)};
    }
    /// Image of an integer under Z -> F_p -> F_q.
    FieldElem from_int(std::int64_t n) const noexcept {
        const auto p = static_cast<std::int64_t>(d_->p);
        std::int64_t r = n % p;
        if (r < 0) r += p;
        return {static_cast<std::uint32_t>(r)};
    }
    FieldElem from_coords(std::span<const std::uint64_t> coords) const {
        if (coords.size() > d_->k) fail(Errc::InvalidArgument, "too many coordinates for field element");
        std::uint64_t v = 0;
        for (std::size_t i = coords.size(); i-- > 0;) v = v * d_->p + coords[i] % d_->p;
        return {static_cast<std::uint32_t>(v)};
    }
    std::vector<std::uint64_t> coords(FieldElem a) const {
        std::vector<std::uint64_t> c(d_->k);
        std::uint64_t v = a.v;
        for (auto& x : c) {
            x = v % d_->p;
            v /= d_->p;
        }
        return c;
    }

    bool is_zero(FieldElem a) const noexcept { return a.v == 0; }

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        if (d_->k == 1) {
            const std::uint64_t s = std::uint64_t{a.v} + b.v;
            return {static_cast<std::uint32_t>(s >= d_->p ? s - d_->p : s)};
        }
        if (!d_->add_table.empty()) return {d_->add_table[std::size_t{a.v} * d_->q + b.v]};
        return digit_add(a, b, false);
    }
    FieldElem neg(FieldElem a) const noexcept {
        if (a.v == 0) return a;
        if (d_->k == 1) return {static_cast<std::uint32_t>(d_->p - a.v)};
        return digit_add(FieldElem{0}, a, true);
    }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept {
        if (d_->k == 1) return {static_cast<std::uint32_t>(a.v >= b.v ? a.v - b.v : a.v + d_->p - b.v)};
        if (!d_->add_table.empty()) return add(a, neg(b));
        return digit_add(a, b, true);
    }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        if (d_->k == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % d_->p)};
        if (a.v == 0 || b.v == 0) return {0};
        return {d_->exp[std::size_t{d_->log[a.v]} + d_->log[b.v]]};
    }
    FieldElem inv(FieldElem a) const {
        if (a.v == 0) fail(Errc::InvalidArgument, "inverse of zero");
        if (d_->k == 1) return {static_cast<std::uint32_t>(detail::fp_pow(a.v, d_->p - 2, d_->p))};
        const std::uint32_t l = d_->log[a.v];
        return {d_->exp[l == 0 ? 0 : (d_->q - 1) - l]};
    }
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const noexcept {
        FieldElem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->k == b.d_->k);
    }

    std::string name() const { return std::to_string(d_->p) + "^" + std::to_string(d_->k); }

   private:
    explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

    FieldElem digit_add(FieldElem a, FieldElem b, bool subtract) const noexcept {
        const std::uint64_t p = d_->p;
        if (p == 2) return {a.v ^ b.v};
        std::uint64_t x = a.v, y = b.v, r = 0, place = 1;
        for (unsigned i = 0; i < d_->k; ++i) {
            const std::uint64_t dx = x % p, dy = y % p;
            const std::uint64_t s = subtract ? (dx + p - dy) % p : (dx + dy) % p;
            r += s * place;
            place *= p;
            x /= p;
            y /= p;
        }
        return {static_cast<std::uint32_t>(r)};
    }

    static std::vector<std::uint32_t> find_modulus(std::uint64_t p, unsigned k, std::uint64_t q) {
        // Counter value c enumerates the lower coefficients with c_{k-1} most
        // significant, which is exactly high-degree-first lexicographic order.
        for (std::uint64_t c = 0; c < q; ++c) {
            detail::FpPoly f(k + 1);
            std::uint64_t v = c;
            for (unsigned i = 0; i < k; ++i) {
                f[i] = v % p;
                v /= p;
            }
            f[k] = 1;
            if (k > 1 && f[0] == 0) continue;
            if (detail::fp_monic_irreducible(f, p)) return {f.begin(), f.end()};
        }
        fail(Errc::InternalError, "no irreducible polynomial found");
    }

    static std::uint32_t slow_mul(const detail::FieldData& d, std::uint32_t a, std::uint32_t b) {
        auto unpack = [&](std::uint64_t v) {
            detail::FpPoly r(d.k);
            for (auto& x : r) {
                x = v % d.p;
                v /= d.p;
            }
            detail::fp_trim(r);
            return r;
        };
        const detail::FpPoly m(d.modulus.begin(), d.modulus.end());
        const auto r = detail::fp_mulmod(unpack(a), unpack(b), m, d.p);
        std::uint64_t v = 0;
        for (std::size_t i = r.size(); i-- > 0;) v = v * d.p + r[i];
        return static_cast<std::uint32_t>(v);
    }

    static void build_tables(detail::FieldData& d) {
        const std::uint32_t order = d.q - 1;
        for (std::uint32_t g = 2; g < d.q; ++g) {
            std::vector<std::uint32_t> powers;
            powers.reserve(order);
            std::uint32_t x = 1;
            do {
                powers.push_back(x);
                x = slow_mul(d, x, g);
            } while (x != 1 && powers.size() <= order);
            if (powers.size() != order) continue;
            d.exp.resize(2 * std::size_t{order});
            d.log.assign(d.q, 0);
            for (std::uint32_t i = 0; i < order; ++i) {
                d.exp[i] = d.exp[i + order] = powers[i];
                d.log[powers[i]] = i;
            }
            break;
        }
        if (d.exp.empty()) fail(Errc::InternalError, "no primitive element found");
        if (d.q <= kAddTableOrder) {
            FieldCtx tmp(std::make_shared<detail::FieldData>(d));
            d.add_table.resize(std::size_t{d.q} * d.q);
            for (std::uint32_t a = 0; a < d.q; ++a)
                for (std::uint32_t b = 0; b < d.q; ++b)
                    d.add_table[std::size_t{a} * d.q + b] = tmp.digit_add({a}, {b}, false).v;
        }
    }

    std::shared_ptr<const detail::FieldData> d_;
};

}  // namespace irrspec

#endif  // IRRSPEC_FIELD_HPP
