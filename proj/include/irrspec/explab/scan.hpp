#ifndef IRRSPEC_EXPLAB_SCAN_HPP
#define IRRSPEC_EXPLAB_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <thread>
#include <vector>

#include "../error.hpp"
#include "../field.hpp"
#include "../groups.hpp"
#include "../rng.hpp"

namespace irrspec::explab {

/// Partial counts of one shard. Merging is commutative addition.
struct Tally {
    std::uint64_t scanned = 0;
    std::uint64_t accepted = 0;
    std::uint64_t hits = 0;
    std::map<std::vector<unsigned>, std::uint64_t> shapes;

    void merge(const Tally& o) {
        scanned += o.scanned;
        accepted += o.accepted;
        hits += o.hits;
        for (const auto& [s, c] : o.shapes) shapes[s] += c;
    }
};

inline constexpr std::uint64_t kShardSize = 4096;

/// Visits `space` indices (exhaustive) or `mode.count` draws (sample).
/// Exhaustive visits receive rng = nullptr. Sample shard s draws from
/// Rng::derive(mode.seed, s). Shards have a fixed size, so the merged tally
/// does not depend on the worker count.
template <class Visit>
Tally scan(std::uint64_t space, const Mode& mode, unsigned workers, std::uint64_t bound, Visit visit) {
    if (mode.exhaustive && space > bound)
        fail(Errc::InvalidArgument, "exhaustive scan of " + std::to_string(space) + " points exceeds the bound " +
                                        std::to_string(bound) + "; use sample mode");
    const std::uint64_t total = mode.exhaustive ? space : mode.count;
    const std::uint64_t shards = (total + kShardSize - 1) / kShardSize;
    std::vector<Tally> parts(shards);
    std::vector<std::exception_ptr> errors(shards);
    std::atomic<std::uint64_t> next{0};

    auto work = [&] {
        for (;;) {
            const std::uint64_t s = next.fetch_add(1);
            if (s >= shards) return;
            const std::uint64_t lo = s * kShardSize;
            const std::uint64_t hi = std::min(total, lo + kShardSize);
            try {
                if (mode.exhaustive) {
                    for (std::uint64_t i = lo; i < hi; ++i) visit(i, static_cast<Rng*>(nullptr), parts[s]);
                } else {
                    Rng rng = Rng::derive(mode.seed, s);
                    for (std::uint64_t i = lo; i < hi; ++i) visit(i, &rng, parts[s]);
                }
            } catch (...) {
                errors[s] = std::current_exception();
            }
        }
    };

    const unsigned w = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, shards)));
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    Tally out;
    for (std::uint64_t s = 0; s < shards; ++s) {
        if (errors[s]) std::rethrow_exception(errors[s]);
        out.merge(parts[s]);
    }
    return out;
}

/// Base-q digits of `index`, least significant first.
inline std::vector<FieldElem> decode_tuple(const FieldCtx& F, std::uint64_t index, std::size_t len) {
    std::vector<FieldElem> a(len);
    for (std::size_t i = 0; i < len; ++i) {
        a[i] = F.element(index % F.q());
        index /= F.q();
    }
    return a;
}

inline std::vector<FieldElem> draw_tuple(const FieldCtx& F, Rng& rng, std::size_t len) {
    std::vector<FieldElem> a(len);
    for (auto& x : a) x = F.element(rng.uniform(F.q()));
    return a;
}

/// Tuple for scan index `i`: decoded in exhaustive mode, drawn in sample mode.
inline std::vector<FieldElem> point(const FieldCtx& F, std::uint64_t i, Rng* rng, std::size_t len) {
    return rng ? draw_tuple(F, *rng, len) : decode_tuple(F, i, len);
}

/// q^e, failing with Overflow past 2^63.
inline std::uint64_t space_size(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 63) / q) fail(Errc::Overflow, "scan space exceeds 2^63");
        r *= q;
    }
    return r;
}

}  // namespace irrspec::explab

#endif  // IRRSPEC_EXPLAB_SCAN_HPP
