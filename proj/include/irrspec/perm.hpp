#ifndef IRRSPEC_PERM_HPP
#define IRRSPEC_PERM_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "error.hpp"

namespace irrspec {

using Point = std::uint32_t;

/// Permutation of {0, ..., N-1} stored as its image table.
class Perm {
   public:
    Perm() = default;
    explicit Perm(std::vector<Point> image) : img_(std::move(image)) { validate(); }

    static Perm identity(std::size_t n) {
        Perm p;
        p.img_.resize(n);
        std::iota(p.img_.begin(), p.img_.end(), Point{0});
        return p;
    }
    /// Product of the given disjoint cycles on n points.
    static Perm from_cycles(std::size_t n, std::initializer_list<std::initializer_list<Point>> cycles) {
        std::vector<std::vector<Point>> cs;
        for (auto c : cycles) cs.emplace_back(c);
        return from_cycles(n, cs);
    }
    static Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
        Perm p = identity(n);
        for (const auto& c : cycles) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] >= n) fail(Errc::PointOutOfRange, "cycle point out of range");
                p.img_[c[i]] = c[(i + 1) % c.size()];
            }
        }
        p.validate();
        return p;
    }

    /// Caller guarantees `image` is a bijection.
    static Perm unchecked(std::vector<Point> image) {
        Perm p;
        p.img_ = std::move(image);
        return p;
    }

    std::size_t degree() const noexcept { return img_.size(); }
    Point apply(Point x) const noexcept { return img_[x]; }
    Point operator[](Point x) const noexcept { return img_[x]; }
    const std::vector<Point>& image() const noexcept { return img_; }
    bool is_identity() const noexcept {
        for (Point i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    /// Disjoint cycles including fixed points, each starting at its least point.
    std::vector<std::vector<Point>> cycles() const {
        std::vector<std::vector<Point>> out;
        std::vector<bool> seen(img_.size(), false);
        for (Point i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::vector<Point> c;
            for (Point j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                c.push_back(j);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    /// Cycle lengths, sorted descending.
    std::vector<unsigned> cycle_type() const {
        std::vector<unsigned> t;
        for (const auto& c : cycles()) t.push_back(static_cast<unsigned>(c.size()));
        std::sort(t.begin(), t.end(), std::greater<>());
        return t;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend bool operator<(const Perm& a, const Perm& b) noexcept { return a.img_ < b.img_; }

   private:
    void validate() const {
        std::vector<bool> hit(img_.size(), false);
        for (Point x : img_) {
            if (x >= img_.size() || hit[x]) fail(Errc::InvalidArgument, "image table is not a bijection");
            hit[x] = true;
        }
    }

    std::vector<Point> img_;
};

/// compose(a, b) applies b first, then a: (a b)(x) = a(b(x)).
inline Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) fail(Errc::DomainMismatch, "permutations on different domains");
    std::vector<Point> r(a.degree());
    for (Point x = 0; x < r.size(); ++x) r[x] = a[b[x]];
    return Perm::unchecked(std::move(r));
}

inline Perm inverse(const Perm& a) {
    std::vector<Point> r(a.degree());
    for (Point x = 0; x < r.size(); ++x) r[a[x]] = x;
    return Perm::unchecked(std::move(r));
}

inline const Perm& perm_of(const Perm& p) noexcept { return p; }
inline std::uint32_t label_of(const Perm&) noexcept { return 0; }
inline std::uint32_t label_modulus(const Perm&) noexcept { return 1; }

/// Disjoint-cycle notation with 0-based points; fixed points are omitted and
/// the identity prints as "()".
inline std::string format_perm(const Perm& p) {
    std::string s;
    for (const auto& c : p.cycles()) {
        if (c.size() < 2) continue;
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

/// Permutation together with its image under a homomorphism onto Z/m.
/// Products multiply the permutations and add the labels.
struct LabeledElem {
    Perm perm;
    std::uint32_t label = 0;
    std::uint32_t modulus = 1;

    static LabeledElem identity(std::size_t n, std::uint32_t m) { return {Perm::identity(n), 0, m}; }
    std::size_t degree() const noexcept { return perm.degree(); }
    Point apply(Point x) const noexcept { return perm.apply(x); }

    friend bool operator==(const LabeledElem&, const LabeledElem&) = default;
    friend bool operator<(const LabeledElem& a, const LabeledElem& b) noexcept {
        if (a.label != b.label) return a.label < b.label;
        return a.perm < b.perm;
    }
};

inline LabeledElem compose(const LabeledElem& a, const LabeledElem& b) {
    if (a.modulus != b.modulus) fail(Errc::DomainMismatch, "labels modulo different integers");
    return {compose(a.perm, b.perm), (a.label + b.label) % a.modulus, a.modulus};
}

inline LabeledElem inverse(const LabeledElem& a) {
    return {inverse(a.perm), (a.modulus - a.label) % a.modulus, a.modulus};
}

inline const Perm& perm_of(const LabeledElem& e) noexcept { return e.perm; }
inline std::uint32_t label_of(const LabeledElem& e) noexcept { return e.label; }
inline std::uint32_t label_modulus(const LabeledElem& e) noexcept { return e.modulus; }

inline std::string format_labeled(const LabeledElem& e) { return format_perm(e.perm) + "@" + std::to_string(e.label); }

}  // namespace irrspec

template <>
struct std::hash<irrspec::Perm> {
    std::size_t operator()(const irrspec::Perm& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : p.image()) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }
};

template <>
struct std::hash<irrspec::LabeledElem> {
    std::size_t operator()(const irrspec::LabeledElem& e) const noexcept {
        return std::hash<irrspec::Perm>{}(e.perm) * 31 + e.label;
    }
};

namespace irrspec {

template <class E>
concept GroupElement = std::equality_comparable<E> && requires(const E& a, const E& b, Point x) {
    { compose(a, b) } -> std::same_as<E>;
    { inverse(a) } -> std::same_as<E>;
    { a.apply(x) } -> std::convertible_to<Point>;
    { a.degree() } -> std::convertible_to<std::size_t>;
    { perm_of(a) } -> std::convertible_to<const Perm&>;
    { label_of(a) } -> std::convertible_to<std::uint32_t>;
    { std::hash<E>{}(a) } -> std::convertible_to<std::size_t>;
};

/// Generator list for a group acting on {0, ..., domain-1}.
template <GroupElement E>
struct Gens {
    std::size_t domain = 0;
    E identity;
    std::vector<E> gens;
};

using GroupGens = Gens<Perm>;
using LabeledGens = Gens<LabeledElem>;

inline GroupGens make_gens(std::size_t n, std::vector<Perm> gens = {}) {
    for (const auto& g : gens)
        if (g.degree() != n) fail(Errc::DomainMismatch, "generator on wrong domain");
    return {n, Perm::identity(n), std::move(gens)};
}

inline LabeledGens make_labeled_gens(std::size_t n, std::uint32_t m, std::vector<LabeledElem> gens = {}) {
    for (const auto& g : gens)
        if (g.degree() != n || g.modulus != m) fail(Errc::DomainMismatch, "generator on wrong domain");
    return {n, LabeledElem::identity(n, m), std::move(gens)};
}

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// Every element of <gens>, by breadth-first closure. The identity comes
/// first and the order is deterministic. Throws CapExceeded (with the number
/// of elements found so far) once more than `cap` elements appear.
template <GroupElement E>
std::vector<E> generate(const Gens<E>& g, std::size_t cap = kDefaultCap) {
    if (cap < 1) fail(Errc::InvalidArgument, "cap must be >= 1");
    std::vector<E> elems{g.identity};
    std::unordered_set<E> seen{g.identity};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& s : g.gens) {
            E next = compose(s, elems[i]);
            if (seen.insert(next).second) {
                elems.push_back(std::move(next));
                if (elems.size() > cap) fail(Errc::CapExceeded, "group larger than cap", elems.size());
            }
        }
    }
    return elems;
}

/// Orbit of x under <gens>, sorted. Works on points only, never on elements.
template <GroupElement E>
std::vector<Point> orbit(const Gens<E>& g, Point x) {
    if (x >= g.domain) fail(Errc::PointOutOfRange, "point outside the domain");
    std::vector<bool> seen(g.domain, false);
    std::vector<Point> out{x};
    seen[x] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& s : g.gens) {
            const Point y = s.apply(out[i]);
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff <gens> is transitive on `block`. The block must be nonempty and
/// mapped into itself by every generator.
template <GroupElement E>
bool is_transitive_on(const Gens<E>& g, const std::vector<Point>& block) {
    if (block.empty()) fail(Errc::InvalidArgument, "empty block");
    std::vector<bool> in(g.domain, false);
    for (Point b : block) {
        if (b >= g.domain) fail(Errc::PointOutOfRange, "block point outside the domain");
        in[b] = true;
    }
    for (const auto& s : g.gens)
        for (Point b : block)
            if (!in[s.apply(b)]) fail(Errc::BlockNotStable, "generator maps block outside itself");
    return orbit(g, block.front()).size() == std::unordered_set<Point>(block.begin(), block.end()).size();
}

/// Ordered blocks partitioning the domain, each with a base point.
struct BlockPartition {
    std::size_t domain = 0;
    std::vector<std::vector<Point>> blocks;
    std::vector<Point> base;

    /// Consecutive blocks of the given sizes; base point = first point of each.
    static BlockPartition consecutive(const std::vector<std::size_t>& sizes) {
        BlockPartition bp;
        Point next = 0;
        for (auto s : sizes) {
            std::vector<Point> b(s);
            std::iota(b.begin(), b.end(), next);
            bp.base.push_back(next);
            next += static_cast<Point>(s);
            bp.blocks.push_back(std::move(b));
        }
        bp.domain = next;
        return bp;
    }

    void validate() const {
        if (blocks.size() != base.size()) fail(Errc::InvalidArgument, "one base point per block");
        std::vector<bool> hit(domain, false);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].empty()) fail(Errc::InvalidArgument, "empty block");
            for (Point x : blocks[i]) {
                if (x >= domain || hit[x]) fail(Errc::InvalidArgument, "blocks must be disjoint and in range");
                hit[x] = true;
            }
            if (std::find(blocks[i].begin(), blocks[i].end(), base[i]) == blocks[i].end())
                fail(Errc::InvalidArgument, "base point outside its block");
        }
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) fail(Errc::InvalidArgument, "blocks must cover the domain");
    }
};

/// True iff the cyclic group <g> is transitive on every block, i.e. the cycle
/// of g through each base point has the block's length.
inline bool transitive_on_all_blocks(const Perm& g, const BlockPartition& bp) {
    for (std::size_t i = 0; i < bp.blocks.size(); ++i) {
        std::size_t len = 1;
        for (Point y = g[bp.base[i]]; y != bp.base[i]; y = g[y]) ++len;
        if (len != bp.blocks[i].size()) return false;
    }
    return true;
}

}  // namespace irrspec

#endif  // IRRSPEC_PERM_HPP
