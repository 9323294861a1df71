#ifndef IRRSPEC_EMBED_HPP
#define IRRSPEC_EMBED_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bipoly.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "groups.hpp"
#include "perm.hpp"

namespace irrspec {

enum class Provenance { Product, Wreath };

inline std::string to_string(Provenance p) { return p == Provenance::Product ? "product" : "wreath"; }

/// Finite data of the geometric embedding problem over F_q: the labeled group
/// H (label = image in Z/m = Gal(L/K)), its root blocks, and the kernel of the
/// label map with its uniform sampler. Frobenius maps to 1 in Z/m.
struct GaloisModel {
    LabeledGens group;
    BlockPartition blocks;
    std::uint32_t m = 1;
    SymmetricProduct kernel;
    LabeledElem coset_rep;  // an element with label frob_label
    Provenance provenance = Provenance::Product;
    std::vector<std::size_t> params;  // degrees (product) or orbit sizes (wreath)
    std::size_t n = 1;                // substitution degree for wreath models

    std::uint32_t frob_label() const noexcept { return 1 % m; }
    Kernel kernel_spec() const { return Kernel::from(kernel); }
    std::vector<unsigned> transitive_shape() const {
        std::vector<unsigned> s;
        for (const auto& b : blocks.blocks) s.push_back(static_cast<unsigned>(b.size()));
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }
    std::string describe() const {
        std::string s = to_string(provenance) + ":";
        if (provenance == Provenance::Wreath) s += std::to_string(n) + ":";
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        return s;
    }
};

namespace detail {

// Label values of the generators must generate Z/m.
inline void assert_label_surjective(const GaloisModel& model) {
    std::uint32_t g = model.m;
    for (const auto& e : model.group.gens) g = std::gcd(g, e.label);
    if (std::gcd(g, model.m) != 1 && model.m != 1) fail(Errc::InternalError, "label map is not surjective");
}

}  // namespace detail

/// prod S_{d_i} with trivial constant-field group (m = 1).
inline GaloisModel model_product(const std::vector<std::size_t>& degrees) {
    if (degrees.empty()) fail(Errc::EmptyInput, "no degrees");
    auto pg = sym_product(degrees);
    GaloisModel model;
    std::vector<LabeledElem> gens;
    for (auto& g : pg.group.gens) gens.push_back({std::move(g), 0, 1});
    model.group = make_labeled_gens(pg.blocks.domain, 1, std::move(gens));
    model.blocks = std::move(pg.blocks);
    model.kernel = std::move(pg.kernel);
    model.coset_rep = LabeledElem::identity(model.blocks.domain, 1);
    model.provenance = Provenance::Product;
    model.params = degrees;
    detail::assert_label_surjective(model);
    return model;
}

/// S_n wr_Omega Z/m for f = f_1 ... f_s with irreducible factor degrees
/// `shapes` over F_q; m = lcm of the degrees (order of Frobenius on the roots).
inline GaloisModel model_wreath(std::size_t n, const std::vector<std::size_t>& shapes, std::uint64_t p) {
    if (n < 1) fail(Errc::InvalidArgument, "n must be >= 1");
    if (p == 2 && n % 2 == 0) fail(Errc::EvenNCharTwo, "n must be odd in characteristic 2");
    if (shapes.empty()) fail(Errc::BadShapes, "no factor degrees");
    std::uint64_t m = 1;
    for (auto d : shapes) {
        if (d < 1) fail(Errc::BadShapes, "factor degree must be >= 1");
        m = std::lcm(m, static_cast<std::uint64_t>(d));
        if (m > 1'000'000) fail(Errc::Overflow, "Frobenius order too large");
    }
    auto w = wreath_cyclic(n, shapes, static_cast<std::uint32_t>(m));
    GaloisModel model;
    model.group = std::move(w.group);
    model.blocks = std::move(w.blocks);
    model.m = static_cast<std::uint32_t>(m);
    model.kernel = std::move(w.kernel);
    model.coset_rep = std::move(w.frobenius);
    model.provenance = Provenance::Wreath;
    model.params = shapes;
    model.n = n;
    detail::assert_label_surjective(model);
    return model;
}

/// Embedding problem with target coset alpha^{-1}(frobenius label).
struct EmbeddingProblem {
    const GaloisModel* model;
    std::uint32_t target;

    explicit EmbeddingProblem(const GaloisModel& m) : model(&m), target(m.frob_label()) {}
};

/// Weak solutions over a procyclic Galois group are the elements h with
/// label(h) = 1; H0 = <h>. Exhaustive mode returns the whole coset, sample
/// mode `mode.count` uniform draws from it.
inline std::vector<LabeledElem> frobenius_lifts(const EmbeddingProblem& ep, const Mode& mode, std::size_t cap = kDefaultCap) {
    const GaloisModel& model = *ep.model;
    if (model.coset_rep.label != ep.target) fail(Errc::NoWeakSolution, "no element maps to the Frobenius label");
    std::vector<LabeledElem> out;
    if (mode.exhaustive) {
        if (model.kernel.order() > cap) fail(Errc::CapExceeded, "coset larger than cap", cap);
        model.kernel.for_each([&](const Perm& k) { out.push_back({compose(k, model.coset_rep.perm), ep.target, model.m}); });
    } else {
        Rng rng(mode.seed);
        for (std::uint64_t i = 0; i < mode.count; ++i)
            out.push_back({compose(model.kernel.sample(rng), model.coset_rep.perm), ep.target, model.m});
    }
    if (out.empty()) fail(Errc::NoWeakSolution, "empty coset");
    return out;
}

/// Probability that a uniform Frobenius lift is transitive on every block.
inline Density predicted_density(const GaloisModel& model, const Mode& mode = Mode::all(), std::size_t cap = kDefaultCap) {
    return coset_transitive_fraction(model.kernel_spec(), model.coset_rep, model.blocks, mode, cap);
}

/// Witness C found by check_theorem2.
struct Theorem2Witness {
    std::string candidate;  // which member of the candidate chain
    LabeledGens c;
};

/// Searches C over the chain kernel, <kernel, H0>, setwise block stabilizers
/// containing the kernel, and H, returning the first C for which
/// (H0 cap C) x_i = C x_i holds on every block. The chain is not the full
/// subgroup lattice.
inline std::optional<Theorem2Witness> check_theorem2(const GaloisModel& model, const LabeledGens& h0,
                                                     std::size_t cap = kDefaultCap) {
    const std::uint32_t m = model.m;
    const std::size_t n = model.blocks.domain;
    const auto kernel_perm = model.kernel.gens();
    std::vector<LabeledElem> kernel_gens;
    for (const auto& g : kernel_perm.gens) kernel_gens.push_back({g, 0, m});
    const LabeledGens kernel = make_labeled_gens(n, m, kernel_gens);

    std::vector<std::pair<std::string, LabeledGens>> chain;
    chain.emplace_back("kernel", kernel);
    {
        auto join = kernel_gens;
        join.insert(join.end(), h0.gens.begin(), h0.gens.end());
        chain.emplace_back("kernel+H0", make_labeled_gens(n, m, std::move(join)));
    }
    const auto h_elems = generate(model.group, cap);
    for (std::size_t b = 0; b < model.blocks.blocks.size(); ++b) {
        std::vector<bool> in(n, false);
        for (Point x : model.blocks.blocks[b]) in[x] = true;
        std::vector<LabeledElem> stab;
        for (const auto& e : h_elems) {
            bool keeps = true;
            for (Point x : model.blocks.blocks[b]) keeps = keeps && in[e.apply(x)];
            if (keeps) stab.push_back(e);
        }
        chain.emplace_back("stabilizer:" + std::to_string(b), make_labeled_gens(n, m, std::move(stab)));
    }
    chain.emplace_back("H", model.group);

    for (auto& [name, c] : chain) {
        try {
            if (criterion_check(h0, c, kernel, model.blocks, cap)) return Theorem2Witness{name, std::move(c)};
        } catch (const Error& e) {
            if (e.code() != Errc::KernelNotContained) throw;
        }
    }
    return std::nullopt;
}

/// Exact or sampled probabilities attached to factorization shapes.
struct ShapeDistribution {
    std::map<std::vector<unsigned>, std::uint64_t> counts;
    std::uint64_t total = 0;
    bool exact = true;

    double probability(const std::vector<unsigned>& s) const {
        auto it = counts.find(s);
        return it == counts.end() || total == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
    }
};

/// Distribution of cycle types of a uniform Frobenius lift; an orbit of length
/// l corresponds to an irreducible factor of degree l.
inline ShapeDistribution shape_distribution(const GaloisModel& model, const Mode& mode = Mode::all(),
                                            std::size_t cap = kDefaultCap) {
    ShapeDistribution dist;
    dist.exact = mode.exhaustive;
    auto record = [&](const Perm& k) {
        ++dist.counts[compose(k, model.coset_rep.perm).cycle_type()];
        ++dist.total;
    };
    if (mode.exhaustive) {
        if (model.kernel.order() > cap) fail(Errc::CapExceeded, "coset larger than cap", cap);
        model.kernel.for_each(record);
    } else {
        Rng rng(mode.seed);
        for (std::uint64_t i = 0; i < mode.count; ++i) record(model.kernel.sample(rng));
    }
    return dist;
}

/// Observed factorization of one specialization.
struct SpecializationSample {
    std::vector<FieldElem> point;
    Shape shape;
    bool accepted = false;
    std::string rejection;  // "degree-drop" or "inseparable" when rejected
};

/// Sample for T -> a on F(T, X); rejected unless the degree in X is kept
/// and the specialization is separable.
inline SpecializationSample make_sample(const BiPoly& f, FieldElem a) {
    SpecializationSample s;
    s.point = {a};
    const auto sp = eval_partial(f, a);
    if (sp.degree_dropped) {
        s.rejection = "degree-drop";
    } else if (!sp.separable) {
        s.rejection = "inseparable";
    } else {
        s.accepted = true;
        s.shape = shape(sp.poly);
    }
    return s;
}

struct ShapeRow {
    std::vector<unsigned> shape;
    std::uint64_t observed = 0;
    double predicted = 0.0;
};

struct FitReport {
    std::vector<ShapeRow> rows;  // sorted by shape
    double tv = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::uint64_t q = 0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
};

/// Total variation distance between the empirical shape frequencies and a
/// predicted distribution. Passes when tv <= 4 q^{-1/2} + 4 accepted^{-1/2}.
inline FitReport fit_counts(const std::map<std::vector<unsigned>, std::uint64_t>& observed, std::uint64_t rejected,
                            const ShapeDistribution& predicted, std::uint64_t q) {
    FitReport r;
    r.q = q;
    r.rejected = rejected;
    for (const auto& [s, c] : observed) r.accepted += c;
    if (r.accepted == 0) fail(Errc::NoAcceptedSamples, "no accepted specializations");
    std::map<std::vector<unsigned>, ShapeRow> rows;
    for (const auto& [s, c] : observed) rows[s] = {s, c, 0.0};
    for (const auto& [s, c] : predicted.counts) {
        auto& row = rows[s];
        row.shape = s;
        row.predicted = predicted.probability(s);
    }
    double l1 = 0.0;
    for (auto& [s, row] : rows) {
        l1 += std::abs(static_cast<double>(row.observed) / static_cast<double>(r.accepted) - row.predicted);
        r.rows.push_back(row);
    }
    r.tv = std::min(1.0, 0.5 * l1);
    r.threshold = 4.0 / std::sqrt(static_cast<double>(q)) + 4.0 / std::sqrt(static_cast<double>(r.accepted));
    r.pass = r.tv <= r.threshold;
    return r;
}

inline FitReport chebotarev_fit(const GaloisModel& model, const std::vector<SpecializationSample>& samples, std::uint64_t q,
                                const Mode& mode = Mode::all()) {
    std::map<std::vector<unsigned>, std::uint64_t> observed;
    std::uint64_t rejected = 0;
    for (const auto& s : samples) {
        if (s.accepted)
            ++observed[s.shape.degrees];
        else
            ++rejected;
    }
    if (observed.empty()) fail(Errc::NoAcceptedSamples, "no accepted specializations");
    return fit_counts(observed, rejected, shape_distribution(model, mode), q);
}

}  // namespace irrspec

#endif  // IRRSPEC_EMBED_HPP
