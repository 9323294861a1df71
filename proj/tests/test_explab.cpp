#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <irrspec/explab.hpp>

#include "oracles.hpp"

using namespace irrspec;
using namespace irrspec::explab;

namespace {

ExperimentConfig make(Kind k, std::string field, std::vector<std::string> polys) {
    ExperimentConfig c;
    c.kind = k;
    c.field = std::move(field);
    c.polys = std::move(polys);
    c.timing = false;
    return c;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InternalError;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(MonicFromTuple, Examples) {
    const auto F = FieldCtx::create(3, 1);
    const std::vector<FieldElem> zero(3, F.zero());
    EXPECT_EQ(monic_from_tuple(F, zero), Poly::monomial(F, F.one(), 3));
    const std::vector<FieldElem> a{F.from_int(1), F.from_int(2)};
    EXPECT_EQ(monic_from_tuple(F, a), Poly::from_ints(F, {2, 1, 1}));
    EXPECT_EQ(code_of([&] { (void)monic_from_tuple(F, std::vector<FieldElem>{}); }), Errc::EmptyInput);
}

TEST(Schinzel, LinearExample) {
    auto c = make(Kind::Schinzel, "3", {"X-1"});
    c.n = 2;
    const auto r = run_schinzel(c);
    EXPECT_EQ(r.hits, 3u);
    EXPECT_EQ(r.scanned, 9u);
    EXPECT_EQ(r.accepted, 9u);
}

TEST(Schinzel, EvenNInCharTwo) {
    auto c = make(Kind::Schinzel, "2", {"X"});
    c.n = 2;
    EXPECT_EQ(code_of([&] { (void)run_schinzel(c); }), Errc::PreconditionFailed);
}

TEST(Schinzel, Preconditions) {
    auto c = make(Kind::Schinzel, "3", {"X^2-1"});
    c.n = 3;
    EXPECT_EQ(code_of([&] { (void)run_schinzel(c); }), Errc::PreconditionFailed);
    c.polys = {"X+1", "2*X+2"};
    EXPECT_EQ(code_of([&] { (void)run_schinzel(c); }), Errc::PreconditionFailed);
    c.polys = {"X+1"};
    c.n.reset();
    EXPECT_EQ(code_of([&] { (void)run_schinzel(c); }), Errc::InvalidArgument);
}

// (t^2 + a1 t + a2)^2 + 1 factored by trial division for all 9 tuples.
TEST(Schinzel, QuarticOracle) {
    const auto F = FieldCtx::create(3, 1);
    std::uint64_t expected = 0;
    for (int a1 = 0; a1 < 3; ++a1)
        for (int a2 = 0; a2 < 3; ++a2) {
            const Poly g = Poly::from_ints(F, {a2, a1, 1});
            const Poly h = g * g + Poly::one(F);
            const auto fs = oracle::trial_factor(h);
            if (fs.size() == 1 && fs[0].second == 1) ++expected;
        }
    auto c = make(Kind::Schinzel, "3", {"X^2+1"});
    c.n = 2;
    const auto r = run_schinzel(c);
    EXPECT_EQ(r.hits, expected);
    EXPECT_EQ(r.scanned, 9u);
}

TEST(Schinzel, LinearIdentity) {
    for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
        auto c = make(Kind::Schinzel, std::to_string(p), {"X-1"});
        c.n = n;
        const auto r = run_schinzel(c);
        EXPECT_EQ(r.hits, count_irreducible(FieldCtx::create(p, 1), n)) << p << " " << n;
    }
}

TEST(Dirichlet, Example) {
    const auto r = run_dirichlet(make(Kind::Dirichlet, "3", {"1", "X", "X"}));
    EXPECT_EQ(r.scanned, 2u);  // tau = 0 is excluded
    EXPECT_EQ(r.hits, 1u);
    EXPECT_EQ(r.details.at("c"), "X");
    ASSERT_TRUE(r.fit.has_value());
    EXPECT_TRUE(r.fit->pass);
}

TEST(Dirichlet, Errors) {
    EXPECT_EQ(code_of([] { (void)run_dirichlet(make(Kind::Dirichlet, "3", {"X^2-1", "X+1", "X"})); }), Errc::NotCoprime);
    EXPECT_EQ(code_of([] { (void)run_dirichlet(make(Kind::Dirichlet, "3", {"1", "X"})); }), Errc::InvalidArgument);
    auto c = make(Kind::Dirichlet, "3", {"X", "1"});
    c.m = 1;
    c.attempts = 0;
    EXPECT_EQ(code_of([&] { (void)run_dirichlet(c); }), Errc::SearchExhausted);
}

TEST(Dirichlet, SearchRecordsC) {
    auto c = make(Kind::Dirichlet, "7", {"X+1", "X"});
    c.m = 2;
    const auto r = run_dirichlet(c);
    const auto F = FieldCtx::create(7, 1);
    const Poly cc = parse_poly(F, r.details.at("c").get<std::string>());
    EXPECT_EQ(cc.degree(), 2);
    EXPECT_TRUE(r.fit->pass);
    // recount with the reported c
    std::uint64_t hits = 0;
    for (std::uint32_t t = 1; t < 7; ++t) {
        const Poly f = parse_poly(F, "X+1") + scale(Poly::x(F) * cc, FieldElem{t});
        hits += oracle::brute_irreducible(f);
    }
    EXPECT_EQ(r.hits, hits);
}

// (1+a^2) T^2 + 2ab T + (b^2+1) by trial division over all 25 lines.
TEST(Linespec, ConicOracle) {
    const auto F = FieldCtx::create(5, 1);
    std::uint64_t expected = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            const Poly h = Poly::from_ints(F, {b * b + 1, 2 * a * b, 1 + a * a});
            if (h.degree() == 2 && oracle::brute_irreducible(h)) ++expected;
        }
    auto c = make(Kind::Linespec, "5", {"X^2+T^2+1"});
    c.A = 5;
    const auto r = run_linespec(c);
    EXPECT_EQ(r.hits, expected);
    EXPECT_EQ(r.scanned, 25u);
    EXPECT_TRUE(r.details.at("count_ge_A").get<bool>());
}

TEST(Linespec, Errors) {
    EXPECT_EQ(code_of([] { (void)run_linespec(make(Kind::Linespec, "2", {"X^2+T+1"})); }), Errc::PreconditionFailed);
    EXPECT_EQ(code_of([] { (void)run_linespec(make(Kind::Linespec, "5", {})); }), Errc::EmptyInput);
    EXPECT_EQ(code_of([] { (void)run_linespec(make(Kind::Linespec, "7", {"X^2-T^3"})); }), Errc::PreconditionFailed);
}

TEST(Linespec, DensityLadder) {
    for (const char* field : {"5", "3^2", "13"}) {
        auto c = make(Kind::Linespec, field, {"X^2+T^2+1"});
        c.A = 5;
        const auto r = run_linespec(c);
        const double q = static_cast<double>(parse_field(field).q());
        EXPECT_LE(std::abs(r.density - 0.5), 4 / std::sqrt(q)) << field;
        EXPECT_GE(r.hits, 5u) << field;
        EXPECT_TRUE(r.pass) << field;
    }
}

TEST(SmoothCheck, Examples) {
    const auto F5 = FieldCtx::create(5, 1);
    EXPECT_EQ(smooth_check(parse_bipoly(F5, "X^2+T^2+1")).status, Smoothness::Smooth);
    const auto F7 = FieldCtx::create(7, 1);
    const auto cusp = smooth_check(parse_bipoly(F7, "X^2-T^3"));
    EXPECT_EQ(cusp.status, Smoothness::Singular);
    ASSERT_TRUE(cusp.witness.has_value());
    EXPECT_EQ(*cusp.witness, (std::array<FieldElem, 3>{FieldElem{0}, FieldElem{0}, FieldElem{1}}));
    EXPECT_EQ(code_of([&] { (void)smooth_check(parse_bipoly(F5, "X^5+T^5+1")); }), Errc::PreconditionFailed);
}

TEST(SmoothCheck, MoreCurves) {
    const auto F7 = FieldCtx::create(7, 1);
    EXPECT_EQ(smooth_check(parse_bipoly(F7, "X^3+T^3+1")).status, Smoothness::Smooth);      // Fermat cubic
    EXPECT_EQ(smooth_check(parse_bipoly(F7, "X^2-T^2-T^3")).status, Smoothness::Singular);  // node
    EXPECT_EQ(smooth_check(parse_bipoly(F7, "X-T^2")).status, Smoothness::Smooth);
    // singular only at (1:0:0)
    const auto inf = smooth_check(parse_bipoly(F7, "X^2*T-1"));
    EXPECT_EQ(inf.status, Smoothness::Singular);
    // two lines through the origin
    const auto F5 = FieldCtx::create(5, 1);
    EXPECT_EQ(smooth_check(parse_bipoly(F5, "X^2+T^2")).status, Smoothness::Singular);
}

TEST(Traceform, IdentityOracle) {
    const auto F = FieldCtx::create(3, 1);
    std::uint64_t expected = 0, separable = 0;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                const Poly f = Poly::from_ints(F, {x * z - y * y, -(x + z), 1});
                expected += oracle::brute_irreducible(f);
                separable += oracle::trial_factor(f).size() == 2 || oracle::brute_irreducible(f);
            }
    auto c = make(Kind::Traceform, "3", {});
    c.matrix = "1 0;0 1";
    const auto r = run_traceform(c);
    EXPECT_EQ(r.scanned, 27u);
    EXPECT_EQ(r.hits, expected);
    EXPECT_EQ(r.accepted, separable);
}

TEST(Traceform, Errors) {
    auto c = make(Kind::Traceform, "3", {});
    c.matrix = "1 1;0 1";
    EXPECT_EQ(code_of([&] { (void)run_traceform(c); }), Errc::NotSymmetric);
    c.matrix = "1 1;1 1";
    EXPECT_EQ(code_of([&] { (void)run_traceform(c); }), Errc::Degenerate);
    c.matrix = "2";
    const auto r = run_traceform(c);
    EXPECT_EQ(r.density, 1.0);
    EXPECT_EQ(r.hits, 3u);
}

TEST(Chebotarev, Examples) {
    const auto r = run_chebotarev(make(Kind::Chebotarev, "3^2", {"X^2-T"}));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.scanned, 9u);
    EXPECT_EQ(r.accepted, 8u);
    EXPECT_EQ(r.hits, 4u);
    // leading coefficient T^5 - T vanishes on all of F_5
    EXPECT_EQ(code_of([] { (void)run_chebotarev(make(Kind::Chebotarev, "5", {"T^5*X-T*X+1"})); }), Errc::NoAcceptedSamples);
    EXPECT_EQ(run_chebotarev(make(Kind::Chebotarev, "5", {"T*X"})).accepted, 4u);
}

TEST(Chebotarev, ModelFlag) {
    auto c = make(Kind::Chebotarev, "7", {"X^3-T"});
    c.model = "product:3";
    EXPECT_EQ(run_chebotarev(c).details.at("model"), "product:3");
    EXPECT_EQ(parse_model("wreath:2:2", 3).describe(), "wreath:2:2");
    EXPECT_EQ(code_of([] { (void)parse_model("cyclic:3", 3); }), Errc::ParseError);
}

TEST(Chebotarev, SampleRerunIsByteIdentical) {
    auto c = make(Kind::Chebotarev, "101", {"X^2-T"});
    c.mode = Mode::sample(5000, 42);
    c.seed = 42;
    EXPECT_EQ(render(run(c), Format::Json), render(run(c), Format::Json));
}

TEST(Emit, DeterministicAndCsvHeader) {
    auto c = make(Kind::Linespec, "5", {"X^2+T^2+1"});
    const auto r = run(c);
    const auto dir = std::filesystem::temp_directory_path() / "irrspec_emit_test";
    std::filesystem::create_directories(dir);
    const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string(), csv = (dir / "r.csv").string();
    emit(r, Format::Json, a);
    emit(r, Format::Json, b);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(a).find('\r'), std::string::npos);
    emit(r, Format::Csv, csv);
    const auto text = slurp(csv);
    EXPECT_NE(text.find("\nshape,observed,predicted\n"), std::string::npos);
    const auto j = json::parse(slurp(a));
    for (const char* k : {"config", "scanned", "accepted", "hits", "density", "predicted", "error_scale", "pass", "shapes", "elapsed_s"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_LE(j["hits"].get<std::uint64_t>(), j["accepted"].get<std::uint64_t>());
    EXPECT_LE(j["accepted"].get<std::uint64_t>(), j["scanned"].get<std::uint64_t>());
    std::filesystem::remove_all(dir);
    EXPECT_EQ(code_of([&] { emit(r, Format::Json, "/nonexistent-dir/x/report.json"); }), Errc::IoError);
}

TEST(Config, ParseText) {
    const auto c = parse_config_text("kind = schinzel\nfield=3 # comment\npoly=X-1\npoly=X+1\nn=3\nmode=sample:100\nseed=7\n");
    EXPECT_EQ(c.kind, Kind::Schinzel);
    EXPECT_EQ(c.polys.size(), 2u);
    EXPECT_EQ(*c.n, 3u);
    EXPECT_FALSE(c.mode.exhaustive);
    EXPECT_EQ(c.mode.count, 100u);
    EXPECT_EQ(c.mode.seed, 7u);
    EXPECT_EQ(code_of([] { (void)parse_config_text("bogus=1"); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { (void)parse_config_text("no equals sign"); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { (void)parse_mode("sample:0"); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { (void)load_config_file("/nonexistent/cfg"); }), Errc::IoError);
}

TEST(Scan, BoundGuard) {
    auto c = make(Kind::Schinzel, "5", {"X-1"});
    c.n = 3;
    c.bound = 100;
    EXPECT_EQ(code_of([&] { (void)run(c); }), Errc::InvalidArgument);
}

TEST(Determinism, WorkerCountDoesNotMatter) {
    std::vector<ExperimentConfig> cs;
    auto s = make(Kind::Schinzel, "7", {"X^2+1"});
    s.n = 2;
    cs.push_back(s);
    s.mode = Mode::sample(9000, 3);
    s.seed = 3;
    cs.push_back(s);
    auto l = make(Kind::Linespec, "3^2", {"X^2+T^2+1"});
    l.mode = Mode::sample(10000, 5);
    l.seed = 5;
    cs.push_back(l);
    for (auto c : cs) {
        c.workers = 1;
        const auto one = render(run(c), Format::Json);
        c.workers = 4;
        EXPECT_EQ(one, render(run(c), Format::Json));
    }
}

TEST(Consistency, SampleMatchesExhaustive) {
    std::vector<ExperimentConfig> cs;
    auto s = make(Kind::Schinzel, "7", {"X^2+1"});
    s.n = 2;
    cs.push_back(s);
    cs.push_back(make(Kind::Linespec, "7", {"X^2+T^2+1"}));
    auto t = make(Kind::Traceform, "5", {});
    t.matrix = "1 0;0 2";
    cs.push_back(t);
    for (auto c : cs) {
        const double exact = run(c).density;
        c.mode = Mode::sample(20000, 11);
        c.seed = 11;
        const auto r = run(c);
        const double p = r.density;
        EXPECT_LE(std::abs(p - exact), 3 * std::sqrt(p * (1 - p) / static_cast<double>(r.accepted))) << to_string(*c.kind);
    }
}
