#ifndef IRRSPEC_EXPLAB_CONFIG_HPP
#define IRRSPEC_EXPLAB_CONFIG_HPP

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "../error.hpp"
#include "../groups.hpp"

namespace irrspec::explab {

enum class Kind { Schinzel, Dirichlet, Linespec, Traceform, Chebotarev };
enum class Format { Json, Csv };

inline std::string to_string(Kind k) {
    switch (k) {
        case Kind::Schinzel: return "schinzel";
        case Kind::Dirichlet: return "dirichlet";
        case Kind::Linespec: return "linespec";
        case Kind::Traceform: return "traceform";
        case Kind::Chebotarev: return "chebotarev";
    }
    return "unknown";
}

inline Kind parse_kind(std::string_view s) {
    for (Kind k : {Kind::Schinzel, Kind::Dirichlet, Kind::Linespec, Kind::Traceform, Kind::Chebotarev})
        if (s == to_string(k)) return k;
    fail(Errc::InvalidArgument, "unknown experiment kind '" + std::string(s) + "'");
}

inline Format parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    fail(Errc::InvalidArgument, "unknown format '" + std::string(s) + "' (expected csv or json)");
}

inline constexpr std::uint64_t kDefaultScanBound = 100'000'000;

struct ExperimentConfig {
    std::optional<Kind> kind;
    std::string field;
    std::vector<std::string> polys;
    std::optional<unsigned> n;
    Mode mode = Mode::all();
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string out;  // empty or "-" writes to stdout
    Format format = Format::Json;
    std::string matrix;
    std::optional<std::uint64_t> A;
    std::optional<unsigned> m;
    std::string model;  // chebotarev only: product:D1,D2 or wreath:N:S1,S2
    bool allow_inconclusive = false;
    std::uint64_t bound = kDefaultScanBound;
    std::uint64_t attempts = 100;
    bool timing = true;

    std::string mode_string() const {
        return mode.exhaustive ? std::string("exhaustive") : "sample:" + std::to_string(mode.count);
    }
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

inline std::uint64_t parse_u64(std::string_view key, std::string_view v) {
    if (v.empty()) fail(Errc::InvalidArgument, "empty value for " + std::string(key));
    std::uint64_t r = 0;
    for (char c : v) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(Errc::InvalidArgument, "expected a non-negative integer for " + std::string(key) + ", got '" + std::string(v) + "'");
        const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (r > (UINT64_MAX - d) / 10) fail(Errc::Overflow, "value for " + std::string(key) + " exceeds 64 bits");
        r = r * 10 + d;
    }
    return r;
}

inline unsigned parse_uint(std::string_view key, std::string_view v) {
    const auto r = parse_u64(key, v);
    if (r > 1'000'000) fail(Errc::InvalidArgument, "value for " + std::string(key) + " is too large");
    return static_cast<unsigned>(r);
}

inline bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(Errc::InvalidArgument, "expected true or false for " + std::string(key));
}

}  // namespace detail

/// exhaustive | sample:COUNT
inline Mode parse_mode(std::string_view s, std::uint64_t seed = 0) {
    if (s == "exhaustive") return Mode::all();
    if (s.substr(0, 7) == "sample:") {
        const auto count = detail::parse_u64("mode", s.substr(7));
        if (count == 0) fail(Errc::InvalidArgument, "sample count must be positive");
        return Mode::sample(count, seed);
    }
    fail(Errc::InvalidArgument, "mode must be 'exhaustive' or 'sample:COUNT', got '" + std::string(s) + "'");
}

/// Sets one key. Keys match the long CLI flag names. `poly` appends.
inline void apply_key(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
    const std::string v = detail::trim(value);
    if (key == "kind") cfg.kind = parse_kind(v);
    else if (key == "field") cfg.field = v;
    else if (key == "poly") cfg.polys.push_back(v);
    else if (key == "n") cfg.n = detail::parse_uint(key, v);
    else if (key == "mode") cfg.mode = parse_mode(v, cfg.seed);
    else if (key == "seed") {
        cfg.seed = detail::parse_u64(key, v);
        cfg.mode.seed = cfg.seed;
    } else if (key == "workers") {
        cfg.workers = detail::parse_uint(key, v);
        if (cfg.workers == 0) fail(Errc::InvalidArgument, "workers must be >= 1");
    } else if (key == "out") cfg.out = v;
    else if (key == "format") cfg.format = parse_format(v);
    else if (key == "matrix") cfg.matrix = v;
    else if (key == "A") cfg.A = detail::parse_u64(key, v);
    else if (key == "m") cfg.m = detail::parse_uint(key, v);
    else if (key == "model") cfg.model = v;
    else if (key == "allow-inconclusive") cfg.allow_inconclusive = detail::parse_bool(key, v);
    else if (key == "bound") cfg.bound = detail::parse_u64(key, v);
    else if (key == "attempts") cfg.attempts = detail::parse_u64(key, v);
    else if (key == "timing") cfg.timing = detail::parse_bool(key, v);
    else fail(Errc::InvalidArgument, "unknown config key '" + std::string(key) + "'");
}

/// key=value lines; '#' starts a comment; blank lines are ignored.
inline ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig cfg = {}) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected key=value");
        apply_key(cfg, detail::trim(std::string_view(t).substr(0, eq)), std::string_view(t).substr(eq + 1));
    }
    return cfg;
}

inline ExperimentConfig load_config_file(const std::string& path, ExperimentConfig cfg = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::IoError, "cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), std::move(cfg));
}

}  // namespace irrspec::explab

#endif  // IRRSPEC_EXPLAB_CONFIG_HPP
