#ifndef IRRSPEC_EXPLAB_REPORT_HPP
#define IRRSPEC_EXPLAB_REPORT_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "../embed.hpp"
#include "../error.hpp"
#include "config.hpp"

namespace irrspec::explab {

using json = nlohmann::json;

struct Report {
    json config;  // echo of the inputs that determine the result
    std::uint64_t scanned = 0;
    std::uint64_t accepted = 0;
    std::uint64_t hits = 0;
    double density = 0.0;
    double predicted = 0.0;
    double error_scale = 0.0;
    bool pass = false;
    std::vector<ShapeRow> shapes;
    std::optional<FitReport> fit;
    json details = json::object();
    double elapsed_s = 0.0;
};

/// Value rounded to 12 significant digits.
inline double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

/// 12 significant digits as text.
inline std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline json shape_rows_json(const std::vector<ShapeRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) a.push_back({{"shape", r.shape}, {"observed", r.observed}, {"predicted", decimal12(r.predicted)}});
    return a;
}

inline json to_json(const FitReport& f) {
    return {{"shapes", shape_rows_json(f.rows)}, {"tv", round12(f.tv)},         {"threshold", round12(f.threshold)},
            {"pass", f.pass},                    {"q", f.q},                    {"accepted", f.accepted},
            {"rejected", f.rejected}};
}

inline json to_json(const Report& r) {
    json j = {{"config", r.config},
              {"scanned", r.scanned},
              {"accepted", r.accepted},
              {"hits", r.hits},
              {"density", round12(r.density)},
              {"predicted", round12(r.predicted)},
              {"error_scale", round12(r.error_scale)},
              {"pass", r.pass},
              {"elapsed_s", round12(r.elapsed_s)},
              {"details", r.details}};
    if (!r.shapes.empty()) j["shapes"] = shape_rows_json(r.shapes);
    if (r.fit) j["fit"] = to_json(*r.fit);
    return j;
}

namespace detail {

inline std::string csv_field(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return decimal12(v.get<double>());
    return v.dump();
}

inline std::string join_shape(const std::vector<unsigned>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

}  // namespace detail

/// Serialized report. JSON: sorted keys, two-space indent, trailing LF.
/// CSV: a one-row summary table, a blank line, then the shape table.
inline std::string render(const Report& r, Format f) {
    if (f == Format::Json) return to_json(r).dump(2) + "\n";
    const json j = to_json(r);
    std::string s = "kind,field,mode,seed,scanned,accepted,hits,density,predicted,error_scale,pass,elapsed_s\n";
    const json& c = r.config;
    s += detail::csv_field(c.value("kind", json(""))) + "," + detail::csv_field(c.value("field", json(""))) + "," +
         detail::csv_field(c.value("mode", json(""))) + "," + detail::csv_field(c.value("seed", json(0))) + ",";
    for (const char* k : {"scanned", "accepted", "hits", "density", "predicted", "error_scale", "pass", "elapsed_s"})
        s += detail::csv_field(j.at(k)) + (std::string_view(k) == "elapsed_s" ? "\n" : ",");
    s += "\nshape,observed,predicted\n";
    for (const auto& row : r.shapes)
        s += detail::join_shape(row.shape) + "," + std::to_string(row.observed) + "," + decimal12(row.predicted) + "\n";
    return s;
}

/// Writes the rendered report to `path`, or stdout for "" and "-".
inline void emit(const Report& r, Format f, const std::string& path) {
    const std::string text = render(r, f);
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        if (!std::cout) fail(Errc::IoError, "cannot write to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoError, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) fail(Errc::IoError, "write to '" + path + "' failed");
}

}  // namespace irrspec::explab

#endif  // IRRSPEC_EXPLAB_REPORT_HPP
