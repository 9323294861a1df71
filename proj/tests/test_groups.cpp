#include <gtest/gtest.h>

#include <irrspec/groups.hpp>

#include "oracles.hpp"

using namespace irrspec;

namespace {

GroupGens s3() { return make_gens(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})}); }

LabeledGens cyclic(const LabeledElem& h) { return make_labeled_gens(h.degree(), h.modulus, {h}); }

LabeledGens kernel_gens(const WreathGroup& w) {
    std::vector<LabeledElem> g;
    for (const auto& k : w.kernel.gens().gens) g.push_back({k, 0, w.frobenius.modulus});
    return make_labeled_gens(w.blocks.domain, w.frobenius.modulus, g);
}

}  // namespace

TEST(Criterion, Examples) {
    const auto bp = BlockPartition::consecutive({3});
    const auto none = make_gens(3);
    EXPECT_TRUE(criterion_check(s3(), s3(), none, bp));
    const auto c3 = make_gens(3, {Perm::from_cycles(3, {{0, 1, 2}})});
    EXPECT_TRUE(criterion_check(c3, s3(), none, bp));
    EXPECT_TRUE(criterion_check(c3, c3, none, bp));
    EXPECT_FALSE(criterion_check(none, s3(), none, bp));
}

TEST(Criterion, KernelNotContained) {
    const auto bp = BlockPartition::consecutive({3});
    const auto c3 = make_gens(3, {Perm::from_cycles(3, {{0, 1, 2}})});
    const auto t = make_gens(3, {Perm::from_cycles(3, {{0, 1}})});
    try {
        (void)criterion_check(c3, c3, t, bp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::KernelNotContained);
    }
}

TEST(Criterion, FullGroupAndRemarkCases) {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng.uniform(3);
        const std::uint32_t m = static_cast<std::uint32_t>(1 + rng.uniform(2));
        const auto w = wreath_cyclic(n, {m}, m);
        const auto ker = kernel_gens(w);
        EXPECT_TRUE(criterion_check(w.group, w.group, ker, w.blocks));
        // a transitive coset element generates H0 transitive on the blocks
        const LabeledElem h{compose(w.kernel.sample(rng), w.frobenius.perm), w.frobenius.label, m};
        if (oracle::brute_transitive_on_blocks(h.perm, w.blocks.blocks)) {
            EXPECT_TRUE(criterion_check(cyclic(h), w.group, ker, w.blocks));
        }
    }
}

TEST(Lemma3, Examples) {
    const auto bp = BlockPartition::consecutive({3});
    const auto c3 = make_gens(3, {Perm::from_cycles(3, {{0, 1, 2}})});
    auto v = lemma3_verify(s3(), c3, s3(), bp);
    EXPECT_TRUE(v.pass);
    EXPECT_EQ(v.subgroups_checked, 2u);  // A_3 and S_3

    const auto w = wreath_cyclic(2, {2}, 2);
    bool saw_transitive = false;
    w.kernel.for_each([&](const Perm& k) {
        const LabeledElem h{compose(k, w.frobenius.perm), 1, 2};
        if (!transitive_on_all_blocks(h.perm, w.blocks)) return;
        saw_transitive = true;
        const auto r = lemma3_verify(w.group, cyclic(h), w.group, w.blocks);
        EXPECT_TRUE(r.pass);
        EXPECT_GE(r.subgroups_checked, 1u);
    });
    EXPECT_TRUE(saw_transitive);
}

TEST(Lemma3, PreconditionGuard) {
    const auto bp = BlockPartition::consecutive({3});
    try {
        (void)lemma3_verify(s3(), make_gens(3), s3(), bp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PreconditionFailed);
    }
    // C missing part of the kernel
    try {
        (void)lemma3_verify(s3(), s3(), make_gens(3, {Perm::from_cycles(3, {{0, 1, 2}})}), bp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::KernelNotContained);
    }
}

// The lattice walk must find every subgroup of the order-8 wreath group; the
// brute force closes every triple of elements.
TEST(Overgroups, MatchesTripleClosures) {
    const auto w = wreath_cyclic(2, {2}, 2);
    const detail::ElementTable<LabeledElem> ht(generate(w.group));
    const auto subs = overgroups(ht, std::vector<LabeledElem>{});
    std::set<std::set<std::size_t>> found;
    for (const auto& s : subs) {
        std::set<std::size_t> e;
        for (std::size_t i = 0; i < ht.size(); ++i)
            if (detail::test_bit(s.members, i)) e.insert(i);
        found.insert(e);
    }
    std::set<std::set<std::size_t>> brute;
    for (std::size_t a = 0; a < ht.size(); ++a)
        for (std::size_t b = 0; b < ht.size(); ++b)
            for (std::size_t c = 0; c < ht.size(); ++c) {
                const auto elems = generate(make_labeled_gens(4, 2, {ht[a], ht[b], ht[c]}));
                std::set<std::size_t> e;
                for (const auto& x : elems) e.insert(ht.index_of(x));
                brute.insert(e);
            }
    EXPECT_EQ(found, brute);
    EXPECT_EQ(found.size(), 10u);  // subgroups of the dihedral group of order 8
}

TEST(CosetFraction, Examples) {
    const auto w = wreath_cyclic(2, {2}, 2);
    auto d = coset_transitive_fraction(Kernel::from(w.kernel), w.frobenius, w.blocks, Mode::all());
    EXPECT_EQ(d.reduced(), (std::pair<std::uint64_t, std::uint64_t>{1, 2}));
    EXPECT_EQ(d.total, 4u);

    const auto pg = sym_product({2});
    d = coset_transitive_fraction(Kernel::from(pg.kernel), LabeledElem::identity(2, 1), pg.blocks, Mode::all());
    EXPECT_EQ(d.reduced(), (std::pair<std::uint64_t, std::uint64_t>{1, 2}));

    const auto one = sym_product({1});
    d = coset_transitive_fraction(Kernel::from(one.kernel), LabeledElem::identity(1, 1), one.blocks, Mode::all());
    EXPECT_EQ(d.value(), 1.0);
}

TEST(CosetFraction, Errors) {
    const auto w = wreath_cyclic(2, {2}, 2);
    try {
        (void)coset_transitive_fraction(Kernel::from(w.kernel), LabeledElem::identity(4, 2), w.blocks, Mode::all());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PreconditionFailed);
    }
    try {
        (void)coset_transitive_fraction(Kernel{w.kernel.gens(), std::nullopt}, w.frobenius, w.blocks, Mode::sample(10, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NoUniformSampler);
    }
    // exhaustive mode still works without a sampler
    const auto d = coset_transitive_fraction(Kernel{w.kernel.gens(), std::nullopt}, w.frobenius, w.blocks, Mode::all());
    EXPECT_EQ(d.reduced(), (std::pair<std::uint64_t, std::uint64_t>{1, 2}));
}

TEST(CosetFraction, SampleConvergesToExhaustive) {
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{2, 2}, std::pair<std::size_t, std::size_t>{3, 2}}) {
        const auto w = wreath_cyclic(n, {d}, static_cast<std::uint32_t>(d));
        EXPECT_EQ(generate(w.group).size(), n == 2 ? 8u : 72u);
        const auto exact = coset_transitive_fraction(Kernel::from(w.kernel), w.frobenius, w.blocks, Mode::all());
        const std::uint64_t count = 20000;
        const auto est = coset_transitive_fraction(Kernel::from(w.kernel), w.frobenius, w.blocks, Mode::sample(count, 11));
        const double p = exact.value();
        EXPECT_LE(std::abs(est.value() - p), 3 * std::sqrt(p * (1 - p) / count));
        EXPECT_FALSE(est.exact);
        EXPECT_GT(est.stddev(), 0.0);
    }
}
