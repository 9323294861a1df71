#ifndef IRRSPEC_GROUPS_HPP
#define IRRSPEC_GROUPS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "perm.hpp"
#include "rng.hpp"

namespace irrspec {

/// Direct product of the full symmetric groups on disjoint point sets
/// ("factors") inside Sym(domain). Both model kernels have this form, which
/// gives exact uniform sampling and cheap enumeration.
struct SymmetricProduct {
    std::size_t domain = 0;
    std::vector<std::vector<Point>> factors;

    std::uint64_t order() const {
        std::uint64_t r = 1;
        for (const auto& f : factors)
            for (std::uint64_t i = 2; i <= f.size(); ++i) {
                if (r > UINT64_MAX / i) fail(Errc::Overflow, "group order exceeds 64 bits");
                r *= i;
            }
        return r;
    }

    GroupGens gens() const {
        std::vector<Perm> g;
        for (const auto& f : factors) {
            if (f.size() < 2) continue;
            g.push_back(Perm::from_cycles(domain, {{f[0], f[1]}}));
            if (f.size() > 2) g.push_back(Perm::from_cycles(domain, std::vector<std::vector<Point>>{f}));
        }
        return make_gens(domain, std::move(g));
    }

    /// Independent Fisher-Yates shuffle on every factor.
    Perm sample(Rng& rng) const {
        std::vector<Point> img(domain);
        std::iota(img.begin(), img.end(), Point{0});
        for (const auto& f : factors) {
            std::vector<Point> a(f);
            for (std::size_t i = a.size(); i > 1; --i) std::swap(a[i - 1], a[rng.uniform(i)]);
            for (std::size_t i = 0; i < f.size(); ++i) img[f[i]] = a[i];
        }
        return Perm::unchecked(std::move(img));
    }

    /// Calls fn(perm) for every element, in a fixed order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        std::vector<std::vector<Point>> arr(factors);
        for (auto& a : arr) std::sort(a.begin(), a.end());
        std::vector<std::vector<Point>> sorted(arr);
        std::vector<Point> img(domain);
        for (;;) {
            std::iota(img.begin(), img.end(), Point{0});
            for (std::size_t i = 0; i < arr.size(); ++i)
                for (std::size_t j = 0; j < arr[i].size(); ++j) img[sorted[i][j]] = arr[i][j];
            fn(Perm::unchecked(img));
            std::size_t i = 0;
            while (i < arr.size() && !std::next_permutation(arr[i].begin(), arr[i].end())) ++i;
            if (i == arr.size()) return;
        }
    }
};

/// prod S_{d_i} acting on consecutive blocks of sizes d_1, ..., d_s.
struct ProductGroup {
    GroupGens group;
    BlockPartition blocks;
    SymmetricProduct kernel;
};

inline ProductGroup sym_product(const std::vector<std::size_t>& degrees) {
    for (auto d : degrees)
        if (d < 1) fail(Errc::InvalidArgument, "degrees must be >= 1");
    ProductGroup pg;
    pg.blocks = BlockPartition::consecutive(degrees);
    pg.kernel = SymmetricProduct{pg.blocks.domain, pg.blocks.blocks};
    pg.group = pg.kernel.gens();
    return pg;
}

/// S_n wr_Omega Z/m acting on {0..n-1} x Omega. Omega is split into orbits
/// Omega_i of sizes d_i, and the generator of Z/m acts on each Omega_i as a
/// d_i-cycle. The point (j, w) has index w*n + j.
struct WreathGroup {
    LabeledGens group;
    BlockPartition blocks;      // {0..n-1} x Omega_i
    SymmetricProduct kernel;    // S_n on every fibre {0..n-1} x {w}
    LabeledElem frobenius;      // Omega-rotation carrying label 1
};

inline WreathGroup wreath_cyclic(std::size_t n, const std::vector<std::size_t>& orbit_sizes, std::uint32_t m) {
    if (n < 1) fail(Errc::InvalidArgument, "n must be >= 1");
    if (m < 1) fail(Errc::InvalidArgument, "m must be >= 1");
    if (orbit_sizes.empty()) fail(Errc::BadOrbitSize, "no orbits");
    for (auto d : orbit_sizes)
        if (d < 1 || m % d != 0) fail(Errc::BadOrbitSize, "orbit size " + std::to_string(d) + " does not divide " + std::to_string(m));

    const std::size_t omega = std::accumulate(orbit_sizes.begin(), orbit_sizes.end(), std::size_t{0});
    const std::size_t domain = n * omega;
    WreathGroup w;

    std::vector<std::size_t> block_sizes;
    for (auto d : orbit_sizes) block_sizes.push_back(d * n);
    w.blocks = BlockPartition::consecutive(block_sizes);

    w.kernel.domain = domain;
    for (std::size_t om = 0; om < omega; ++om) {
        std::vector<Point> fibre(n);
        for (std::size_t j = 0; j < n; ++j) fibre[j] = static_cast<Point>(om * n + j);
        w.kernel.factors.push_back(std::move(fibre));
    }

    std::vector<Point> img(domain);
    std::size_t start = 0;
    for (auto d : orbit_sizes) {
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t from = start + k, to = start + (k + 1) % d;
            for (std::size_t j = 0; j < n; ++j) img[from * n + j] = static_cast<Point>(to * n + j);
        }
        start += d;
    }
    w.frobenius = LabeledElem{Perm(std::move(img)), 1 % m, m};

    std::vector<LabeledElem> gens;
    for (auto& g : w.kernel.gens().gens) gens.push_back({std::move(g), 0, m});
    gens.push_back(w.frobenius);
    w.group = make_labeled_gens(domain, m, std::move(gens));
    return w;
}

/// Kernel of the label map, optionally with a registered uniform sampler.
struct Kernel {
    GroupGens gens;
    std::optional<SymmetricProduct> uniform;

    static Kernel from(const SymmetricProduct& sp) { return {sp.gens(), sp}; }
};

/// Exhaustive scan or `count` uniform draws from a stream seeded by `seed`.
struct Mode {
    bool exhaustive = true;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    static Mode all() { return {}; }
    static Mode sample(std::uint64_t count, std::uint64_t seed) { return {false, count, seed}; }
};

/// hits / total. Exact when produced by exhaustive enumeration.
struct Density {
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    bool exact = true;

    double value() const noexcept { return total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0; }
    /// Reduced numerator and denominator.
    std::pair<std::uint64_t, std::uint64_t> reduced() const noexcept {
        const std::uint64_t g = std::gcd(hits, total);
        return g ? std::pair{hits / g, total / g} : std::pair{hits, total};
    }
    /// One binomial standard deviation for sampled estimates, zero if exact.
    double stddev() const noexcept {
        if (exact || total == 0) return 0.0;
        const double p = value();
        return std::sqrt(p * (1.0 - p) / static_cast<double>(total));
    }
};

namespace detail {

// Finite group given by its full element list, with index lookup.
template <GroupElement E>
class ElementTable {
   public:
    explicit ElementTable(std::vector<E> elems) : elems_(std::move(elems)) {
        for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    }
    std::size_t size() const noexcept { return elems_.size(); }
    const E& operator[](std::size_t i) const noexcept { return elems_[i]; }
    const std::vector<E>& elements() const noexcept { return elems_; }
    std::optional<std::size_t> find(const E& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const E& e) const { return index_.count(e) != 0; }
    std::size_t index_of(const E& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) fail(Errc::InternalError, "element not in group");
        return it->second;
    }

   private:
    std::vector<E> elems_;
    std::unordered_map<E, std::size_t> index_;
};

template <GroupElement E>
std::vector<Point> orbit_of_elements(const std::vector<E>& elems, Point x) {
    std::vector<Point> out;
    for (const auto& e : elems) out.push_back(e.apply(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Core of the criterion on explicit element lists.
template <GroupElement E>
bool criterion_holds(const std::vector<E>& h0, const ElementTable<E>& c, const BlockPartition& blocks) {
    std::vector<E> inter;
    for (const auto& e : h0)
        if (c.contains(e)) inter.push_back(e);
    for (Point x : blocks.base)
        if (orbit_of_elements(inter, x) != orbit_of_elements(c.elements(), x)) return false;
    return true;
}

using Bits = std::vector<std::uint64_t>;

inline bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
inline void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace detail

/// (H0 cap C) x_i = C x_i for the base point of every block.
/// Requires kernel <= C, checked generator by generator.
template <GroupElement E>
bool criterion_check(const Gens<E>& h0, const Gens<E>& c, const Gens<E>& kernel, const BlockPartition& blocks,
                     std::size_t cap = kDefaultCap) {
    if (h0.domain != blocks.domain || c.domain != blocks.domain || kernel.domain != blocks.domain)
        fail(Errc::DomainMismatch, "groups and blocks on different domains");
    const detail::ElementTable<E> ct(generate(c, cap));
    for (const auto& k : kernel.gens)
        if (!ct.contains(k)) fail(Errc::KernelNotContained, "kernel generator outside C");
    return detail::criterion_holds(generate(h0, cap), ct, blocks);
}

/// Subgroup of a finite group, stored as a membership bitset over its
/// element table together with a generating set.
struct Subgroup {
    detail::Bits members;
    std::vector<std::size_t> gens;
    std::size_t order = 0;
};

/// All subgroups S with <start> <= S <= H, found by closing under one
/// adjoined element at a time and deduplicating by element set. This is the
/// only exponential-cost routine in the library; keep |H| small.
template <GroupElement E>
std::vector<Subgroup> overgroups(const detail::ElementTable<E>& h, const std::vector<E>& start,
                                 std::size_t max_subgroups = 100'000) {
    const std::size_t n = h.size();
    const std::size_t words = (n + 63) / 64;
    auto closure = [&](std::vector<std::size_t> gens) {
        Subgroup s{detail::Bits(words, 0), std::move(gens), 0};
        std::vector<std::size_t> elems{h.index_of(compose(h[0], inverse(h[0])))};
        detail::set_bit(s.members, elems[0]);
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t g : s.gens) {
                const std::size_t next = h.index_of(compose(h[g], h[elems[i]]));
                if (!detail::test_bit(s.members, next)) {
                    detail::set_bit(s.members, next);
                    elems.push_back(next);
                }
            }
        s.order = elems.size();
        return s;
    };

    std::vector<std::size_t> start_idx;
    for (const auto& e : start) {
        auto i = h.find(e);
        if (!i) fail(Errc::PreconditionFailed, "starting element outside H");
        start_idx.push_back(*i);
    }
    std::vector<Subgroup> out;
    std::set<detail::Bits> seen;
    out.push_back(closure(start_idx));
    seen.insert(out.front().members);
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t g = 0; g < n; ++g) {
            if (detail::test_bit(out[k].members, g)) continue;
            auto gens = out[k].gens;
            gens.push_back(g);
            Subgroup t = closure(std::move(gens));
            if (seen.insert(t.members).second) {
                out.push_back(std::move(t));
                if (out.size() > max_subgroups) fail(Errc::CapExceeded, "too many subgroups", out.size());
            }
        }
    }
    return out;
}

template <GroupElement E>
std::vector<E> subgroup_elements(const detail::ElementTable<E>& h, const Subgroup& s) {
    std::vector<E> r;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (detail::test_bit(s.members, i)) r.push_back(h[i]);
    return r;
}

template <GroupElement E>
struct Lemma3Verdict {
    bool pass = true;
    std::size_t subgroups_checked = 0;  // overgroups of H0 mapping onto Z/m
    std::vector<E> witness_gens;        // counterexample H1 when !pass
    std::size_t witness_block = 0;
};

/// Exhaustive group-level check of the step from the criterion to
/// irreducibility: every H1 with H0 <= H1 <= H whose labels cover Z/m must be
/// transitive on every block. Requires criterion_check(H0, C, ker) to hold,
/// ker <= C, and H transitive on each block.
template <GroupElement E>
Lemma3Verdict<E> lemma3_verify(const Gens<E>& h, const Gens<E>& h0, const Gens<E>& c, const BlockPartition& blocks,
                               std::size_t cap = kDefaultCap) {
    if (h.domain != blocks.domain || h0.domain != blocks.domain || c.domain != blocks.domain)
        fail(Errc::DomainMismatch, "groups and blocks on different domains");
    blocks.validate();
    const detail::ElementTable<E> ht(generate(h, cap));
    const std::uint32_t m = label_modulus(h.identity);

    std::vector<E> kernel;
    for (const auto& e : ht.elements())
        if (label_of(e) == 0) kernel.push_back(e);
    const detail::ElementTable<E> ct(generate(c, cap));
    for (const auto& e : ct.elements())
        if (!ht.contains(e)) fail(Errc::PreconditionFailed, "C is not a subgroup of H");
    for (const auto& k : kernel)
        if (!ct.contains(k)) fail(Errc::KernelNotContained, "kernel of the label map is not inside C");
    const auto h0_elems = generate(h0, cap);
    for (const auto& e : h0_elems)
        if (!ht.contains(e)) fail(Errc::PreconditionFailed, "H0 is not a subgroup of H");
    if (!detail::criterion_holds(h0_elems, ct, blocks)) fail(Errc::PreconditionFailed, "criterion does not hold for (H0, C)");
    for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
        auto b = blocks.blocks[i];
        std::sort(b.begin(), b.end());
        if (detail::orbit_of_elements(ht.elements(), blocks.base[i]) != b)
            fail(Errc::PreconditionFailed, "H is not transitive on block " + std::to_string(i));
    }

    Lemma3Verdict<E> verdict;
    for (const auto& s : overgroups(ht, h0.gens)) {
        const auto elems = subgroup_elements(ht, s);
        std::vector<bool> labels(m, false);
        std::size_t covered = 0;
        for (const auto& e : elems)
            if (!labels[label_of(e)]) {
                labels[label_of(e)] = true;
                ++covered;
            }
        if (covered != m) continue;
        ++verdict.subgroups_checked;
        for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
            if (detail::orbit_of_elements(elems, blocks.base[i]).size() != blocks.blocks[i].size()) {
                verdict.pass = false;
                for (auto g : s.gens) verdict.witness_gens.push_back(ht[g]);
                verdict.witness_block = i;
                return verdict;
            }
        }
    }
    return verdict;
}

/// Fraction of the coset kernel * rep whose elements are transitive on every
/// block at once. `rep`'s label must generate Z/m.
inline Density coset_transitive_fraction(const Kernel& kernel, const LabeledElem& rep, const BlockPartition& blocks,
                                         const Mode& mode, std::size_t cap = kDefaultCap) {
    if (std::gcd(rep.label, rep.modulus) != 1) fail(Errc::PreconditionFailed, "representative label does not generate Z/m");
    if (kernel.gens.domain != blocks.domain || rep.degree() != blocks.domain)
        fail(Errc::DomainMismatch, "kernel, representative and blocks on different domains");
    Density d;
    if (mode.exhaustive) {
        auto visit = [&](const Perm& k) {
            ++d.total;
            if (transitive_on_all_blocks(compose(k, rep.perm), blocks)) ++d.hits;
        };
        if (kernel.uniform) {
            if (kernel.uniform->order() > cap) fail(Errc::CapExceeded, "kernel larger than cap", cap);
            kernel.uniform->for_each(visit);
        } else {
            for (const auto& k : generate(kernel.gens, cap)) visit(k);
        }
        return d;
    }
    if (!kernel.uniform) fail(Errc::NoUniformSampler, "kernel has no registered uniform sampler");
    Rng rng(mode.seed);
    d.exact = false;
    for (std::uint64_t i = 0; i < mode.count; ++i) {
        ++d.total;
        if (transitive_on_all_blocks(compose(kernel.uniform->sample(rng), rep.perm), blocks)) ++d.hits;
    }
    return d;
}

}  // namespace irrspec

#endif  // IRRSPEC_GROUPS_HPP
