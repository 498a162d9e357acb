#pragma once

// Timing harness contrasting the recursive Sylvester-sum pipeline with
// gap enumeration. The enumeration runs only when a*b fits the cell bound;
// when both run, all of S_0..S_m must agree or the report is refused.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sylv/errors.hpp"
#include "sylv/exact_math.hpp"
#include "sylv/gaps.hpp"
#include "sylv/representability.hpp"
#include "sylv/sylvester_sums.hpp"

namespace sylv {

struct BenchRow {
    std::string a;
    std::string b;
    unsigned m = 0;
    std::string method;
    std::string status;  // "ok" or "skipped_over_bound"
    std::optional<std::uint64_t> wall_time_ns;
    std::optional<std::size_t> value_digits;  // decimal digits of S_m
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::string environment;
};

class BenchMismatch : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

inline bool is_decimal_integer(const std::string& s) {
    static const std::regex re("-?[0-9]+");
    return std::regex_match(s, re);
}

inline BigInt parse_integer(const std::string& s, const std::string& what) {
    if (!is_decimal_integer(s)) throw InputError("invalid integer for " + what + ": '" + s + "'");
    return BigInt(s);
}

// CSV with header "a,b", one coprime pair per row. Line numbers in errors count the header as line 1.
inline std::vector<CoprimePair> parse_pairs_csv(std::istream& in) {
    std::vector<CoprimePair> pairs;
    std::string line;
    std::size_t line_no = 0;
    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        std::size_t i = 0;
        while (i < s.size() && s[i] == ' ') ++i;
        return s.substr(i);
    };
    while (std::getline(in, line)) {
        ++line_no;
        line = strip(line);
        if (line_no == 1) {
            if (line != "a,b") throw InputError("pairs file: expected header \"a,b\" at line 1");
            continue;
        }
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw InputError("pairs file: expected two fields at line " + std::to_string(line_no));
        const std::string where = " at line " + std::to_string(line_no);
        const BigInt a = parse_integer(strip(line.substr(0, comma)), "a" + where);
        const BigInt b = parse_integer(strip(line.substr(comma + 1)), "b" + where);
        try {
            pairs.push_back(sylv::make_pair(a, b));
        } catch (const NotCoprime&) {
            throw NotCoprime("not coprime at line " + std::to_string(line_no));
        } catch (const NonPositive&) {
            throw NonPositive("non-positive value at line " + std::to_string(line_no));
        }
    }
    if (line_no == 0) throw InputError("pairs file: empty (missing header \"a,b\")");
    return pairs;
}

inline std::string bench_environment() {
    std::ostringstream os;
#if defined(__clang__)
    os << "compiler=clang-" << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
    os << "compiler=gcc-" << __GNUC__ << "." << __GNUC_MINOR__;
#else
    os << "compiler=unknown";
#endif
    os << " threads=" << std::thread::hardware_concurrency();
#ifdef NDEBUG
    os << " build=release";
#else
    os << " build=debug";
#endif
    return os.str();
}

namespace detail {

// Median wall time over `reps` runs of fn; the last result is kept in `out`.
template <class Fn, class Out>
std::uint64_t median_time_ns(unsigned reps, Fn&& fn, Out& out) {
    std::vector<std::uint64_t> times;
    times.reserve(reps);
    for (unsigned r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        out = fn();
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

}  // namespace detail

inline BenchReport run_bench(const std::vector<CoprimePair>& pairs, unsigned m, unsigned repetitions,
                             std::uint64_t max_cells = kDefaultMaxCells) {
    if (repetitions == 0) throw InputError("bench: repetitions must be positive");
    BenchReport report;
    report.environment = bench_environment();
    for (const auto& pair : pairs) {
        std::optional<SumTable> rec;
        const std::uint64_t rec_ns =
            detail::median_time_ns(repetitions, [&] { return std::optional<SumTable>(sylvester_sums_recursive(pair, m)); }, rec);
        report.rows.push_back({pair.a().str(), pair.b().str(), m, "recursive", "ok", rec_ns, rec->values[m].str().size()});

        if (pair.ab() > max_cells) {
            report.rows.push_back({pair.a().str(), pair.b().str(), m, "enumerate", "skipped_over_bound", std::nullopt, std::nullopt});
            continue;
        }
        std::optional<SumTable> en;
        const std::uint64_t en_ns = detail::median_time_ns(
            repetitions, [&] { return std::optional<SumTable>(sylvester_sums_enumerate(pair, m, max_cells)); }, en);
        if (en->values != rec->values) {
            std::ostringstream os;
            for (unsigned k = 0; k <= m; ++k) os << "  S_" << k << " recursive=" << rec->values[k] << " enumerate=" << en->values[k] << "\n";
            throw BenchMismatch("bench: recursive and enumerated sums differ for " + pair.str(), os.str());
        }
        report.rows.push_back({pair.a().str(), pair.b().str(), m, "enumerate", "ok", en_ns, en->values[m].str().size()});
    }
    return report;
}

// CSV columns: a,b,m,method,status,wall_time_ns,value_digits. wall_time_ns is the
// only run-dependent column.
inline std::string render_bench_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "a,b,m,method,status,wall_time_ns,value_digits\n";
    for (const auto& r : report.rows) {
        os << r.a << "," << r.b << "," << r.m << "," << r.method << "," << r.status << ",";
        if (r.wall_time_ns) os << *r.wall_time_ns;
        os << ",";
        if (r.value_digits) os << *r.value_digits;
        os << "\n";
    }
    return os.str();
}

}  // namespace sylv
