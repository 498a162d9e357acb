#pragma once

// JSON, CSV and plain-table renderings of library results.
//
// Every integer goes into JSON as a decimal string. Key order is fixed and
// CSV uses LF line endings with a mandatory header row, so output is
// byte-stable for identical inputs.

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sylv/errors.hpp"
#include "sylv/gaps.hpp"
#include "sylv/identities.hpp"
#include "sylv/sylvester_sums.hpp"

namespace sylv {

enum class OutputFormat { json, csv, table };

inline OutputFormat parse_output_format(std::string_view s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "table") return OutputFormat::table;
    throw InputError("unknown format '" + std::string(s) + "' (expected json, csv or table)");
}

using Json = nlohmann::ordered_json;

inline std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

// Quotes a CSV field only when it needs it.
inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline Json to_json(const GapSet& g) {
    Json j;
    j["a"] = g.pair.a().str();
    j["b"] = g.pair.b().str();
    j["frobenius"] = g.frobenius.str();
    j["count"] = g.cardinality.str();
    Json gaps = Json::array();
    for (auto v : g.elements) gaps.push_back(std::to_string(v));
    j["gaps"] = std::move(gaps);
    return j;
}

inline std::string render(const GapSet& g, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json: return render_json(to_json(g));
        case OutputFormat::csv:
            os << "gap\n";
            for (auto v : g.elements) os << v << "\n";
            break;
        case OutputFormat::table:
            os << "a=" << g.pair.a() << " b=" << g.pair.b() << " frobenius=" << g.frobenius << " count=" << g.cardinality
               << " method=" << to_string(g.method) << "\n";
            os << "gaps:";
            for (auto v : g.elements) os << " " << v;
            os << "\n";
            break;
    }
    return os.str();
}

inline Json to_json(const SumTable& t) {
    Json j;
    j["a"] = t.pair.a().str();
    j["b"] = t.pair.b().str();
    j["method"] = std::string(to_string(t.method));
    Json sums = Json::array();
    for (const auto& v : t.values) sums.push_back(v.str());
    j["sums"] = std::move(sums);
    return j;
}

inline std::string render(const SumTable& t, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json: return render_json(to_json(t));
        case OutputFormat::csv:
            os << "index,value\n";
            for (std::size_t i = 0; i < t.values.size(); ++i) os << i << "," << t.values[i] << "\n";
            break;
        case OutputFormat::table:
            os << "a=" << t.pair.a() << " b=" << t.pair.b() << " method=" << to_string(t.method) << "\n";
            for (std::size_t i = 0; i < t.values.size(); ++i) os << "S_" << i << " = " << t.values[i] << "\n";
            break;
    }
    return os.str();
}

inline Json to_json(const VerifyReport& r) {
    Json j;
    j["all_passed"] = r.all_passed;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json rec;
        rec["name"] = c.name;
        rec["parameters"] = c.parameters;
        rec["passed"] = c.passed;
        rec["lhs"] = c.lhs;
        rec["rhs"] = c.rhs;
        checks.push_back(std::move(rec));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline std::string render(const VerifyReport& r, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json: return render_json(to_json(r));
        case OutputFormat::csv:
            os << "name,parameters,passed,lhs,rhs\n";
            for (const auto& c : r.checks)
                os << csv_field(c.name) << "," << csv_field(c.parameters) << "," << (c.passed ? "true" : "false") << ","
                   << csv_field(c.lhs) << "," << csv_field(c.rhs) << "\n";
            break;
        case OutputFormat::table: {
            // One summary line per check family, then every failing record.
            std::vector<std::string> order;
            std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // passed, total
            for (const auto& c : r.checks) {
                auto [it, fresh] = tally.try_emplace(c.name, 0, 0);
                if (fresh) order.push_back(c.name);
                it->second.first += c.passed ? 1 : 0;
                it->second.second += 1;
            }
            for (const auto& name : order) {
                const auto& [passed, total] = tally[name];
                os << (passed == total ? "PASS " : "FAIL ") << name << " " << passed << "/" << total << "\n";
            }
            for (const auto& c : r.checks)
                if (!c.passed) os << "  failed " << c.name << " [" << c.parameters << "] lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
            os << (r.all_passed ? "all checks passed" : "some checks FAILED") << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace sylv
