#ifndef IRRSPEC_EXPLAB_EXPERIMENTS_HPP
#define IRRSPEC_EXPLAB_EXPERIMENTS_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "../bipoly.hpp"
#include "../embed.hpp"
#include "../error.hpp"
#include "../factor.hpp"
#include "../matrix.hpp"
#include "../text.hpp"
#include "config.hpp"
#include "report.hpp"
#include "scan.hpp"
#include "smooth.hpp"

namespace irrspec::explab {

/// T^n + a_1 T^{n-1} + ... + a_n.
inline Poly monic_from_tuple(const FieldCtx& F, std::span<const FieldElem> a) {
    if (a.empty()) fail(Errc::EmptyInput, "empty coefficient tuple");
    std::vector<FieldElem> c(a.size() + 1);
    c[a.size()] = F.one();
    for (std::size_t i = 0; i < a.size(); ++i) c[a.size() - 1 - i] = a[i];
    return Poly(F, std::move(c));
}

inline constexpr std::uint64_t kExactModelLimit = 200'000;
inline constexpr std::uint64_t kModelSamples = 200'000;

/// model:  product:D1,D2,...  |  wreath:N:S1,S2,...
inline GaloisModel parse_model(std::string_view text, std::uint64_t p) {
    auto list = [&](std::string_view s) {
        std::vector<std::size_t> out;
        std::size_t start = 0;
        while (start <= s.size()) {
            const auto comma = s.find(',', start);
            const auto part = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            out.push_back(static_cast<std::size_t>(detail::parse_uint("model", part)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return out;
    };
    if (text.substr(0, 8) == "product:") return model_product(list(text.substr(8)));
    if (text.substr(0, 7) == "wreath:") {
        const auto rest = text.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) fail(Errc::ParseError, "wreath model needs wreath:N:S1,S2");
        return model_wreath(detail::parse_uint("model", rest.substr(0, colon)), list(rest.substr(colon + 1)), p);
    }
    fail(Errc::ParseError, "model must be product:D1,... or wreath:N:S1,...");
}

namespace detail {

inline Mode model_mode(const GaloisModel& model, std::uint64_t seed) {
    return model.kernel.order() <= kExactModelLimit ? Mode::all() : Mode::sample(kModelSamples, seed);
}

inline std::vector<ShapeRow> shape_rows(const std::map<std::vector<unsigned>, std::uint64_t>& observed,
                                        const ShapeDistribution& dist) {
    std::map<std::vector<unsigned>, ShapeRow> rows;
    for (const auto& [s, c] : observed) rows[s] = {s, c, 0.0};
    for (const auto& [s, c] : dist.counts) {
        (void)c;
        rows[s].shape = s;
        rows[s].predicted = dist.probability(s);
    }
    std::vector<ShapeRow> out;
    for (auto& [s, r] : rows) out.push_back(r);
    return out;
}

// Irreducible via the deterministic shape; every hit is re-certified.
inline bool certified_irreducible(const Poly& f) {
    const Shape s = shape(f);
    const bool hit = s.squarefree && s.degrees.size() == 1;
    if (hit && !is_irreducible(f)) fail(Errc::InternalError, "shape and irreducibility test disagree");
    return hit;
}

inline void append_shape(std::vector<unsigned>& acc, const Shape& s) {
    acc.insert(acc.end(), s.degrees.begin(), s.degrees.end());
}

inline void sort_shape(std::vector<unsigned>& s) { std::sort(s.begin(), s.end(), std::greater<>()); }

inline json config_echo(const ExperimentConfig& cfg) {
    json c = {{"kind", cfg.kind ? to_string(*cfg.kind) : std::string()},
              {"field", cfg.field},
              {"mode", cfg.mode_string()},
              {"seed", cfg.seed},
              {"polys", cfg.polys}};
    if (cfg.n) c["n"] = *cfg.n;
    if (!cfg.matrix.empty()) c["matrix"] = cfg.matrix;
    if (cfg.A) c["A"] = *cfg.A;
    if (cfg.m) c["m"] = *cfg.m;
    if (!cfg.model.empty()) c["model"] = cfg.model;
    if (cfg.allow_inconclusive) c["allow_inconclusive"] = true;
    return c;
}

// Fills density fields and the tolerance verdict: |density - predicted| is
// compared with 4 q^{-1/2} plus three standard deviations of each sampled side.
inline bool finish_density(Report& r, const Tally& t, const Density& pred, std::uint64_t q, bool sampled) {
    r.scanned = t.scanned;
    r.accepted = t.accepted;
    r.hits = t.hits;
    r.density = t.accepted ? static_cast<double>(t.hits) / static_cast<double>(t.accepted) : 0.0;
    r.predicted = pred.value();
    double sigma = 0.0;
    if (sampled && t.accepted)
        sigma = std::sqrt(std::max(r.density * (1 - r.density), 1.0 / static_cast<double>(t.accepted)) /
                          static_cast<double>(t.accepted));
    const double tol = 4.0 / std::sqrt(static_cast<double>(q)) + 3.0 * sigma + 3.0 * pred.stddev();
    r.details["tolerance"] = round12(tol);
    r.details["predicted_exact"] = pred.exact;
    if (pred.exact) r.details["predicted_fraction"] = std::to_string(pred.reduced().first) + "/" + std::to_string(pred.reduced().second);
    return t.accepted > 0 && std::abs(r.density - r.predicted) <= tol;
}

inline std::vector<Poly> parse_polys(const FieldCtx& F, const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(parse_poly(F, t));
    return out;
}

inline std::vector<BiPoly> parse_bipolys(const FieldCtx& F, const std::vector<std::string>& texts) {
    std::vector<BiPoly> out;
    for (const auto& t : texts) out.push_back(parse_bipoly(F, t));
    return out;
}

}  // namespace detail

/// Counts tuples a in F_q^n with every f_i(G(a, T)) irreducible.
inline Report run_schinzel(const ExperimentConfig& cfg) {
    const auto F = parse_field(cfg.field);
    const auto fs = detail::parse_polys(F, cfg.polys);
    if (fs.empty()) fail(Errc::EmptyInput, "schinzel needs at least one --poly");
    if (!cfg.n || *cfg.n < 1) fail(Errc::InvalidArgument, "schinzel needs --n >= 1");
    const std::size_t n = *cfg.n;
    if (F.p() == 2 && n % 2 == 0) fail(Errc::PreconditionFailed, "n must be odd in characteristic 2");
    std::set<Poly> seen;
    std::vector<std::size_t> degrees;
    for (const auto& f : fs) {
        if (f.degree() < 1) fail(Errc::PreconditionFailed, "f_i must be nonconstant");
        if (!is_separable(f)) fail(Errc::PreconditionFailed, "f_i must be separable: " + format_poly(f));
        if (!is_irreducible(f)) fail(Errc::PreconditionFailed, "f_i must be irreducible: " + format_poly(f));
        if (!seen.insert(monic(f)).second) fail(Errc::PreconditionFailed, "f_i are associate: " + format_poly(f));
        degrees.push_back(static_cast<std::size_t>(f.degree()));
    }
    const auto model = model_wreath(n, degrees, F.p());
    const Mode pm = detail::model_mode(model, cfg.seed);
    const auto pred = predicted_density(model, pm);
    const auto dist = shape_distribution(model, pm);

    const std::uint64_t space = space_size(F.q(), n);
    const Tally t = scan(space, cfg.mode, cfg.workers, cfg.bound, [&](std::uint64_t i, Rng* rng, Tally& acc) {
        const auto a = point(F, i, rng, n);
        const Poly g = monic_from_tuple(F, a);
        ++acc.scanned;
        ++acc.accepted;
        bool all = true;
        std::vector<unsigned> sh;
        for (const auto& f : fs) {
            const Poly h = compose(f, g);
            detail::append_shape(sh, shape(h));
            all = detail::certified_irreducible(h) && all;
        }
        detail::sort_shape(sh);
        ++acc.shapes[sh];
        if (all) ++acc.hits;
    });

    Report r;
    r.config = detail::config_echo(cfg);
    const double qd = static_cast<double>(F.q());
    r.pass = detail::finish_density(r, t, pred, F.q(), !cfg.mode.exhaustive);
    r.error_scale = std::pow(qd, static_cast<double>(n) - 0.5);
    r.details["model"] = model.describe();
    r.details["predicted_count"] = round12(r.predicted * std::pow(qd, static_cast<double>(n)));
    r.details["remark_main_term"] = round12(std::pow(qd, static_cast<double>(n)));
    r.details["count_deviation"] = round12(static_cast<double>(r.hits) - r.predicted * static_cast<double>(r.scanned));
    r.shapes = detail::shape_rows(t.shapes, dist);
    return r;
}

namespace detail {

struct DirichletScan {
    Tally tally;
    FitReport fit;
};

inline DirichletScan dirichlet_scan(const ExperimentConfig& cfg, const Poly& a, const Poly& bc, std::size_t n,
                                    const ShapeDistribution& dist) {
    const auto& F = a.ctx();
    const std::uint64_t space = F.q() - 1;
    Tally t = scan(space, cfg.mode, cfg.workers, cfg.bound, [&](std::uint64_t i, Rng* rng, Tally& acc) {
        const FieldElem tau = rng ? F.element(1 + rng->uniform(space)) : F.element(i + 1);
        const Poly f = a + scale(bc, tau);
        ++acc.scanned;
        if (f.degree() != static_cast<int>(n) || !is_separable(f)) return;
        ++acc.accepted;
        ++acc.shapes[shape(f).degrees];
        if (certified_irreducible(f)) ++acc.hits;
    });
    if (t.accepted == 0) fail(Errc::NoAcceptedSamples, "no separable full-degree member of the progression");
    FitReport fit = fit_counts(t.shapes, t.scanned - t.accepted, dist, F.q());
    return {std::move(t), std::move(fit)};
}

}  // namespace detail

/// Irreducible members of a + tau*b*c, tau in F_q^*.
inline Report run_dirichlet(const ExperimentConfig& cfg) {
    const auto F = parse_field(cfg.field);
    const auto ps = detail::parse_polys(F, cfg.polys);
    if (ps.size() < 2 || ps.size() > 3) fail(Errc::InvalidArgument, "dirichlet needs --poly a --poly b [--poly c]");
    const Poly& a = ps[0];
    const Poly& b = ps[1];
    if (b.is_zero()) fail(Errc::InvalidArgument, "b must be nonzero");
    if (gcd(a, b).degree() != 0) fail(Errc::NotCoprime, "gcd(a, b) is not constant");
    if (F.q() < 2) fail(Errc::InvalidArgument, "field too small");

    auto attempt = [&](const Poly& c) {
        const Poly bc = b * c;
        const auto n = static_cast<std::size_t>(std::max(a.degree(), bc.degree()));
        if (n < 1) fail(Errc::PreconditionFailed, "a + T*b*c must have positive degree in X");
        const auto model = model_product({n});
        const auto dist = shape_distribution(model, detail::model_mode(model, cfg.seed));
        return std::make_tuple(detail::dirichlet_scan(cfg, a, bc, n, dist), model, dist, n);
    };

    std::optional<Poly> c;
    std::uint64_t tried = 0;
    std::optional<decltype(attempt(a))> found;
    if (ps.size() == 3) {
        c = ps[2];
        if (c->is_zero()) fail(Errc::InvalidArgument, "c must be nonzero");
        found = attempt(*c);
    } else {
        if (!cfg.m) fail(Errc::InvalidArgument, "dirichlet needs --poly c or --m");
        Rng rng(cfg.seed);
        while (tried < cfg.attempts) {
            const Poly cand = random_poly(F, *cfg.m, true, rng);
            ++tried;
            if (gcd(a, cand).degree() != 0) continue;
            auto res = attempt(cand);
            if (std::get<0>(res).fit.pass) {
                c = cand;
                found = std::move(res);
                break;
            }
        }
        if (!found) fail(Errc::SearchExhausted, "no c passed the fit within " + std::to_string(cfg.attempts) + " attempts");
    }
    auto& [ds, model, dist, n] = *found;
    const auto pred = predicted_density(model, detail::model_mode(model, cfg.seed));

    Report r;
    r.config = detail::config_echo(cfg);
    r.config["attempts"] = cfg.attempts;
    const bool ok = detail::finish_density(r, ds.tally, pred, F.q(), !cfg.mode.exhaustive);
    r.error_scale = 1.0 / std::sqrt(static_cast<double>(F.q()));
    r.pass = ok && ds.fit.pass;
    r.details["c"] = format_poly(*c);
    r.details["n"] = n;
    r.details["search_attempts"] = tried;
    r.details["model"] = model.describe();
    r.details["predicted_count"] = round12(r.predicted * static_cast<double>(F.q() - 1));
    r.shapes = detail::shape_rows(ds.tally.shapes, dist);
    r.fit = ds.fit;
    return r;
}

/// Lines X = aT + b along which every f_i(T, X) restricts to an irreducible
/// polynomial of full degree.
inline Report run_linespec(const ExperimentConfig& cfg) {
    const auto F = parse_field(cfg.field);
    const auto fs = detail::parse_bipolys(F, cfg.polys);
    if (fs.empty()) fail(Errc::EmptyInput, "linespec needs at least one --poly");
    std::vector<std::size_t> degrees;
    json smooth = json::array();
    json warnings = json::array();
    for (const auto& f : fs) {
        if (f.is_zero() || f.total_degree() < 1) fail(Errc::PreconditionFailed, "f_i must be nonconstant");
        const auto d = static_cast<std::uint64_t>(f.total_degree());
        if ((d * (d - 1)) % F.p() == 0)
            fail(Errc::PreconditionFailed, "characteristic divides d(d-1) for " + format_bipoly(f));
        degrees.push_back(d);
        const auto sr = smooth_check(f);
        if (sr.status == Smoothness::Singular) {
            std::string msg = "curve is singular: " + format_bipoly(f);
            if (sr.witness)
                msg += " at (" + format_elem(F, (*sr.witness)[0]) + ":" + format_elem(F, (*sr.witness)[1]) + ":" +
                       format_elem(F, (*sr.witness)[2]) + ")";
            fail(Errc::PreconditionFailed, msg);
        }
        if (sr.status == Smoothness::Inconclusive) {
            if (!cfg.allow_inconclusive) fail(Errc::SmoothnessInconclusive, "smoothness undecided for " + format_bipoly(f));
            warnings.push_back("smoothness inconclusive for " + format_bipoly(f) + ": " + sr.note);
        }
        smooth.push_back(to_string(sr.status));
    }
    // Irreducibility over F_q: a full-degree irreducible restriction to a line.
    const std::uint64_t q = F.q();
    for (const auto& f : fs) {
        bool certified = false;
        const std::uint64_t limit = std::min<std::uint64_t>(q * q, 1'000'000);
        for (std::uint64_t i = 0; i < limit && !certified; ++i) {
            const Poly h = substitute_line(f, F.element(i % q), F.element(i / q));
            certified = h.degree() == f.total_degree() && is_irreducible(h);
        }
        if (!certified) fail(Errc::PreconditionFailed, "irreducibility over F_q not certified for " + format_bipoly(f));
    }
    const auto model = model_product(degrees);
    const Mode pm = detail::model_mode(model, cfg.seed);
    const auto pred = predicted_density(model, pm);
    const auto dist = shape_distribution(model, pm);

    const Tally t = scan(space_size(q, 2), cfg.mode, cfg.workers, cfg.bound, [&](std::uint64_t i, Rng* rng, Tally& acc) {
        const auto ab = point(F, i, rng, 2);
        ++acc.scanned;
        std::vector<Poly> rs;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            Poly h = substitute_line(fs[k], ab[0], ab[1]);
            if (h.degree() != static_cast<int>(degrees[k]) || !is_separable(h)) return;
            rs.push_back(std::move(h));
        }
        ++acc.accepted;
        bool all = true;
        std::vector<unsigned> sh;
        for (const auto& h : rs) {
            detail::append_shape(sh, shape(h));
            all = detail::certified_irreducible(h) && all;
        }
        detail::sort_shape(sh);
        ++acc.shapes[sh];
        if (all) ++acc.hits;
    });

    Report r;
    r.config = detail::config_echo(cfg);
    const bool ok = detail::finish_density(r, t, pred, q, !cfg.mode.exhaustive);
    r.error_scale = 1.0 / std::sqrt(static_cast<double>(q));
    r.details["model"] = model.describe();
    r.details["smoothness"] = smooth;
    if (!warnings.empty()) r.details["warnings"] = warnings;
    bool count_ok = true;
    if (cfg.A) {
        count_ok = r.hits >= *cfg.A;
        r.details["A"] = *cfg.A;
        r.details["count_ge_A"] = count_ok;
    }
    r.pass = ok && count_ok;
    r.shapes = detail::shape_rows(t.shapes, dist);
    return r;
}

/// Characteristic polynomials of T*B over symmetric matrices T.
inline Report run_traceform(const ExperimentConfig& cfg) {
    const auto F = parse_field(cfg.field);
    if (cfg.matrix.empty()) fail(Errc::InvalidArgument, "traceform needs --matrix");
    const Matrix B = parse_matrix(F, cfg.matrix);
    const std::size_t n = B.size();
    if (n < 1) fail(Errc::EmptyInput, "empty matrix");
    if (!B.is_symmetric()) fail(Errc::NotSymmetric, "B must be symmetric");
    if (determinant(B).v == 0) fail(Errc::Degenerate, "B must be nondegenerate");
    const auto model = model_product({n});
    const Mode pm = detail::model_mode(model, cfg.seed);
    const auto pred = predicted_density(model, pm);
    const auto dist = shape_distribution(model, pm);
    const std::size_t free = n * (n + 1) / 2;

    const Tally t = scan(space_size(F.q(), free), cfg.mode, cfg.workers, cfg.bound, [&](std::uint64_t i, Rng* rng, Tally& acc) {
        const auto e = point(F, i, rng, free);
        Matrix T(F, n);
        std::size_t k = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) {
                T(r, c) = e[k];
                T(c, r) = e[k];
                ++k;
            }
        const Poly f = charpoly(T * B);
        ++acc.scanned;
        if (!is_separable(f)) return;
        ++acc.accepted;
        ++acc.shapes[shape(f).degrees];
        if (detail::certified_irreducible(f)) ++acc.hits;
    });
    if (t.accepted == 0) fail(Errc::NoAcceptedSamples, "no separable characteristic polynomial");

    Report r;
    r.config = detail::config_echo(cfg);
    const bool ok = detail::finish_density(r, t, pred, F.q(), !cfg.mode.exhaustive);
    r.error_scale = 1.0 / std::sqrt(static_cast<double>(F.q()));
    r.fit = fit_counts(t.shapes, t.scanned - t.accepted, dist, F.q());
    r.pass = ok && r.fit->pass;
    r.details["model"] = model.describe();
    r.details["n"] = n;
    r.shapes = detail::shape_rows(t.shapes, dist);
    return r;
}

/// Shape statistics of F(a, X) for a in F_q against a model.
inline Report run_chebotarev(const ExperimentConfig& cfg) {
    const auto F = parse_field(cfg.field);
    if (cfg.polys.size() != 1) fail(Errc::InvalidArgument, "chebotarev needs exactly one --poly");
    const BiPoly f = parse_bipoly(F, cfg.polys[0]);
    if (f.degree_x() < 1) fail(Errc::ConstantInput, "F must have positive degree in X");
    const auto model = cfg.model.empty() ? model_product({static_cast<std::size_t>(f.degree_x())})
                                         : parse_model(cfg.model, F.p());
    const Mode pm = detail::model_mode(model, cfg.seed);
    const auto pred = predicted_density(model, pm);
    const auto dist = shape_distribution(model, pm);
    const auto target = model.transitive_shape();

    const Tally t = scan(F.q(), cfg.mode, cfg.workers, cfg.bound, [&](std::uint64_t i, Rng* rng, Tally& acc) {
        const auto a = point(F, i, rng, 1);
        const auto s = make_sample(f, a[0]);
        ++acc.scanned;
        if (!s.accepted) return;
        ++acc.accepted;
        ++acc.shapes[s.shape.degrees];
        if (s.shape.degrees == target) {
            if (target.size() == 1 && !is_irreducible(eval_partial(f, a[0]).poly))
                fail(Errc::InternalError, "shape and irreducibility test disagree");
            ++acc.hits;
        }
    });
    Report r;
    r.config = detail::config_echo(cfg);
    r.fit = fit_counts(t.shapes, t.scanned - t.accepted, dist, F.q());
    (void)detail::finish_density(r, t, pred, F.q(), !cfg.mode.exhaustive);
    r.error_scale = 1.0 / std::sqrt(static_cast<double>(F.q()));
    r.pass = r.fit->pass;
    r.details["model"] = model.describe();
    r.shapes = detail::shape_rows(t.shapes, dist);
    return r;
}

/// Runs the configured experiment.
inline Report run(const ExperimentConfig& cfg) {
    if (!cfg.kind) fail(Errc::InvalidArgument, "no experiment kind given");
    if (cfg.field.empty()) fail(Errc::InvalidArgument, "no --field given");
    const auto start = std::chrono::steady_clock::now();
    Report r;
    switch (*cfg.kind) {
        case Kind::Schinzel: r = run_schinzel(cfg); break;
        case Kind::Dirichlet: r = run_dirichlet(cfg); break;
        case Kind::Linespec: r = run_linespec(cfg); break;
        case Kind::Traceform: r = run_traceform(cfg); break;
        case Kind::Chebotarev: r = run_chebotarev(cfg); break;
    }
    if (cfg.timing) r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace irrspec::explab

#endif  // IRRSPEC_EXPLAB_EXPERIMENTS_HPP
