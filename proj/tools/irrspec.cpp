#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <irrspec/explab.hpp>

using namespace irrspec;
using namespace irrspec::explab;

int main(int argc, char** argv) {
    CLI::App app{"Irreducible specialization experiments over finite fields"};
    app.set_version_flag("--version", "irrspec 1.0.0");

    std::string kind;
    std::string config_path;
    std::vector<std::string> polys;
    std::vector<std::pair<std::string, std::string>> order = {
        {"field", "field spec p^k"},
        {"n", "substitution degree (schinzel)"},
        {"mode", "exhaustive | sample:COUNT"},
        {"seed", "64-bit seed"},
        {"workers", "worker threads"},
        {"out", "output path, '-' for stdout"},
        {"format", "json | csv"},
        {"matrix", "symmetric matrix 'r1;r2;...' (traceform)"},
        {"A", "required hit count (linespec)"},
        {"m", "degree of the searched c (dirichlet)"},
        {"model", "product:D1,D2 | wreath:N:S1,S2 (chebotarev)"},
        {"bound", "largest exhaustive scan"},
        {"attempts", "search budget for c (dirichlet)"},
    };
    std::vector<std::string> values(order.size());
    app.add_option("kind", kind, "schinzel | dirichlet | linespec | traceform | chebotarev");
    app.add_option("--config", config_path, "key=value file; flags override its keys");
    app.add_option("--poly", polys, "polynomial in text form (repeatable)");
    for (std::size_t i = 0; i < order.size(); ++i) app.add_option("--" + order[i].first, values[i], order[i].second);
    bool allow_inconclusive = false;
    bool no_timing = false;
    app.add_flag("--allow-inconclusive", allow_inconclusive, "scan even if smoothness is undecided");
    app.add_flag("--no-timing", no_timing, "report elapsed_s as 0");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path);
        if (!kind.empty()) cfg.kind = parse_kind(kind);
        for (std::size_t i = 0; i < order.size(); ++i)
            if (app.count("--" + order[i].first)) apply_key(cfg, order[i].first, values[i]);
        cfg.mode.seed = cfg.seed;
        if (!polys.empty()) cfg.polys = polys;
        if (allow_inconclusive) cfg.allow_inconclusive = true;
        if (no_timing) cfg.timing = false;
        const Report r = run(cfg);
        emit(r, cfg.format, cfg.out);
        return r.pass ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "irrspec: " << e.what() << "\n";
        return 1;
    }
}
