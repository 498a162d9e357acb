#pragma once

// The `sylv` command-line surface. run_cli takes the arguments after the
// program name and writes to the given streams, so it is testable in-process.
//
// Exit codes: 0 success or representable, 1 gap or verify failure,
// 2 input error, 3 resource limit, 4 internal invariant violation.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sylv/bench.hpp"
#include "sylv/errors.hpp"
#include "sylv/exact_math.hpp"
#include "sylv/gaps.hpp"
#include "sylv/identities.hpp"
#include "sylv/representability.hpp"
#include "sylv/serialize.hpp"
#include "sylv/sylvester_sums.hpp"

namespace sylv::cli {

enum ExitCode : int {
    kSuccess = 0,
    kGapOrFailure = 1,
    kInputError = 2,
    kResourceLimit = 3,
    kInvariantViolation = 4,
};

struct CommonOptions {
    std::string format = "table";
    std::string output;
    std::string method;
    std::optional<std::string> max_cells;
};

namespace detail {

inline std::uint64_t parse_cell_bound(const std::string& s, const std::string& source) {
    if (!is_decimal_integer(s) || s.front() == '-' || BigInt(s) == 0 ||
        BigInt(s) > std::numeric_limits<std::uint64_t>::max())
        throw InputError(source + " must be a positive integer, got '" + s + "'");
    return static_cast<std::uint64_t>(BigInt(s));
}

// --max-cells wins over SYLV_MAX_CELLS, which wins over the default.
inline std::uint64_t resolve_max_cells(const CommonOptions& opt) {
    if (opt.max_cells) return parse_cell_bound(*opt.max_cells, "--max-cells");
    if (const char* env = std::getenv("SYLV_MAX_CELLS"); env != nullptr) return parse_cell_bound(env, "SYLV_MAX_CELLS");
    return kDefaultMaxCells;
}

inline void emit(const std::string& payload, const CommonOptions& opt, std::ostream& out) {
    if (opt.output.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(opt.output, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot open output file '" + opt.output + "'");
    f << payload;
    if (!f) throw InputError("failed writing output file '" + opt.output + "'");
}

inline void add_common(CLI::App* cmd, CommonOptions& opt, const std::string& method_help) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--output", opt.output, "Write output to PATH instead of stdout");
    if (!method_help.empty()) cmd->add_option("--method", opt.method, method_help);
    cmd->add_option("--max-cells", opt.max_cells, "Grid/sieve cell bound (overrides SYLV_MAX_CELLS)");
}

inline CoprimePair pair_from(const std::string& a, const std::string& b) {
    return sylv::make_pair(parse_integer(a, "a"), parse_integer(b, "b"));
}

inline unsigned parse_index(const std::string& s, const std::string& what) {
    const BigInt v = parse_integer(s, what);
    if (v < 0 || v > 100000) throw InputError(what + " must be in [0, 100000], got " + s);
    return static_cast<unsigned>(v);
}

}  // namespace detail

inline int cmd_frobenius(const std::string& a_arg, const std::string& b_arg, const CommonOptions& opt, std::ostream& out) {
    const CoprimePair pair = detail::pair_from(a_arg, b_arg);
    const BigInt g = frobenius(pair);
    const BigInt n = sylvester_number(pair);
    std::string payload;
    switch (parse_output_format(opt.format)) {
        case OutputFormat::json: {
            Json j;
            j["a"] = pair.a().str();
            j["b"] = pair.b().str();
            j["frobenius"] = g.str();
            j["sylvester_number"] = n.str();
            payload = render_json(j);
            break;
        }
        case OutputFormat::csv:
            payload = "a,b,frobenius,sylvester_number\n" + pair.a().str() + "," + pair.b().str() + "," + g.str() + "," + n.str() + "\n";
            break;
        case OutputFormat::table: payload = "g=" + g.str() + " n=" + n.str() + "\n"; break;
    }
    detail::emit(payload, opt, out);
    return kSuccess;
}

inline int cmd_check(const std::string& a_arg, const std::string& b_arg, const std::string& n_arg, const CommonOptions& opt,
                     std::ostream& out) {
    const CoprimePair pair = detail::pair_from(a_arg, b_arg);
    const BigInt n = parse_integer(n_arg, "n");
    if (n < 0) throw InputError("n must be nonnegative, got " + n.str());
    const std::string method = opt.method.empty() ? "binner" : opt.method;

    BigInt count;
    bool representable = false;
    std::optional<DivisionCriterionData> division;
    if (method == "binner") {
        count = count_representations(pair, n);
        representable = count > 0;
    } else if (method == "brute") {
        count = count_representations_oracle(pair, n);
        representable = count > 0;
    } else if (method == "division") {
        division = is_representable_division(pair, n);
        representable = division->holds;
        count = count_representations(pair, n);
    } else {
        throw InputError("unknown check method '" + method + "' (expected binner, division or brute)");
    }

    const auto wit = witness(pair, n);
    const auto cert = gap_certificate(pair, n);
    if (representable != wit.has_value() || representable == cert.has_value())
        throw InvariantViolation("check: method '" + method + "' disagrees with the residue formula",
                                 "pair=" + pair.str() + " n=" + n.str() + " count=" + count.str());

    const std::string status = representable ? "representable" : "gap";
    std::string payload;
    switch (parse_output_format(opt.format)) {
        case OutputFormat::json: {
            Json j;
            j["a"] = pair.a().str();
            j["b"] = pair.b().str();
            j["n"] = n.str();
            j["method"] = method;
            j["status"] = status;
            j["count"] = count.str();
            if (wit) j["witness"] = Json{{"x", wit->x.str()}, {"y", wit->y.str()}};
            if (cert) j["certificate"] = Json{{"a1", cert->a1.str()}, {"b1", cert->b1.str()}};
            if (division)
                j["division"] = Json{{"q0", division->q0.str()}, {"r0", division->r0.str()}, {"r", division->r.str()},
                                     {"r_m", division->r_m.str()}, {"k_m", division->k_m.str()}, {"holds", division->holds}};
            payload = render_json(j);
            break;
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "a,b,n,method,status,count,x,y,a1,b1\n"
               << pair.a() << "," << pair.b() << "," << n << "," << method << "," << status << "," << count << ",";
            if (wit) os << wit->x << "," << wit->y;
            else os << ",";
            os << ",";
            if (cert) os << cert->a1 << "," << cert->b1;
            else os << ",";
            os << "\n";
            payload = os.str();
            break;
        }
        case OutputFormat::table: {
            std::ostringstream os;
            os << status << " count=" << count;
            if (wit) os << " witness=(" << wit->x << "," << wit->y << ")";
            if (cert) os << " certificate=(" << cert->a1 << "," << cert->b1 << ")";
            os << "\n";
            payload = os.str();
            break;
        }
    }
    detail::emit(payload, opt, out);
    return representable ? kSuccess : kGapOrFailure;
}

inline int cmd_gaps(const std::string& a_arg, const std::string& b_arg, const CommonOptions& opt, std::ostream& out) {
    const CoprimePair pair = detail::pair_from(a_arg, b_arg);
    const std::string method = opt.method.empty() ? "chi" : opt.method;
    GapMethod gm;
    if (method == "chi")
        gm = GapMethod::chi_grid;
    else if (method == "sieve")
        gm = GapMethod::sieve;
    else
        throw InputError("unknown gaps method '" + method + "' (expected chi or sieve)");
    const GapSet gaps = enumerate_gaps(pair, gm, detail::resolve_max_cells(opt));
    detail::emit(render(gaps, parse_output_format(opt.format)), opt, out);
    return kSuccess;
}

inline int cmd_sums(const std::string& a_arg, const std::string& b_arg, const std::string& m_arg, const CommonOptions& opt,
                    std::ostream& out) {
    const CoprimePair pair = detail::pair_from(a_arg, b_arg);
    const unsigned m = detail::parse_index(m_arg, "m");
    const std::string method = opt.method.empty() ? "recursive" : opt.method;
    SumMethod sm;
    if (method == "recursive")
        sm = SumMethod::recursive;
    else if (method == "enumerate")
        sm = SumMethod::enumerate;
    else
        throw InputError("unknown sums method '" + method + "' (expected recursive or enumerate)");
    const SumTable table = sylvester_sums(pair, m, sm, detail::resolve_max_cells(opt));
    detail::emit(render(table, parse_output_format(opt.format)), opt, out);
    return kSuccess;
}

inline int cmd_verify(std::int64_t pairs_up_to, unsigned m_up_to, bool inject_chi_fault, const CommonOptions& opt,
                      std::ostream& out, std::ostream& err) {
    CheckOptions co;
    co.max_cells = detail::resolve_max_cells(opt);
    co.invert_chi = inject_chi_fault;
    const VerifyReport report = run_verify(pairs_up_to, m_up_to, co);
    detail::emit(render(report, parse_output_format(opt.format)), opt, out);
    if (const CheckRecord* bad = report.first_failure()) {
        err << "first failing check: " << bad->name << " [" << bad->parameters << "] lhs=" << bad->lhs << " rhs=" << bad->rhs
            << "\n";
        return kGapOrFailure;
    }
    return kSuccess;
}

inline int cmd_bench(const std::string& pairs_file, unsigned m, unsigned repetitions, const CommonOptions& opt,
                     std::ostream& out, std::ostream& err) {
    std::ifstream in(pairs_file);
    if (!in) throw InputError("cannot open pairs file '" + pairs_file + "'");
    const std::vector<CoprimePair> pairs = parse_pairs_csv(in);
    const BenchReport report = run_bench(pairs, m, repetitions, detail::resolve_max_cells(opt));
    std::string payload;
    if (parse_output_format(opt.format) == OutputFormat::json) {
        Json j;
        j["environment"] = report.environment;
        Json rows = Json::array();
        for (const auto& r : report.rows) {
            Json row;
            row["a"] = r.a;
            row["b"] = r.b;
            row["m"] = std::to_string(r.m);
            row["method"] = r.method;
            row["status"] = r.status;
            row["wall_time_ns"] = r.wall_time_ns ? Json(std::to_string(*r.wall_time_ns)) : Json(nullptr);
            row["value_digits"] = r.value_digits ? Json(std::to_string(*r.value_digits)) : Json(nullptr);
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        payload = render_json(j);
    } else {
        payload = render_bench_csv(report);
    }
    detail::emit(payload, opt, out);
    err << "environment: " << report.environment << "\n";
    return kSuccess;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Two-coin Frobenius problem: representability, gaps and Sylvester power sums", "sylv"};
    app.require_subcommand(1);

    std::string a, b, n, m;
    CommonOptions opt;

    auto* frob = app.add_subcommand("frobenius", "Print the Frobenius number g and the Sylvester number n");
    frob->add_option("a", a)->required();
    frob->add_option("b", b)->required();
    detail::add_common(frob, opt, "");

    auto* check = app.add_subcommand("check", "Decide whether n = ax + by has a nonnegative solution");
    check->add_option("a", a)->required();
    check->add_option("b", b)->required();
    check->add_option("n", n)->required();
    detail::add_common(check, opt, "binner (default), division or brute");

    auto* gaps = app.add_subcommand("gaps", "List the nonrepresentable numbers");
    gaps->add_option("a", a)->required();
    gaps->add_option("b", b)->required();
    detail::add_common(gaps, opt, "chi (default) or sieve");

    auto* sums = app.add_subcommand("sums", "Sylvester power sums S_0..S_m");
    sums->add_option("a", a)->required();
    sums->add_option("b", b)->required();
    sums->add_option("m", m)->required();
    detail::add_common(sums, opt, "recursive (default) or enumerate");

    std::int64_t pairs_up_to = 20;
    unsigned m_up_to = 6;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "Run the identity sweeps");
    verify->add_option("--pairs-up-to", pairs_up_to, "Largest a and b in the pair sweeps")->capture_default_str();
    verify->add_option("--m-up-to", m_up_to, "Largest power index in the sum sweeps")->capture_default_str();
    verify->add_flag("--inject-chi-fault", inject_fault, "Invert the chi indicator (harness self-test)");
    detail::add_common(verify, opt, "");

    std::string pairs_file;
    unsigned bench_m = 5;
    unsigned reps = 5;
    auto* bench = app.add_subcommand("bench", "Time recursive vs enumerated Sylvester sums over a CSV of pairs");
    bench->add_option("pairs_file", pairs_file, "CSV with header a,b")->required();
    bench->add_option("--m", bench_m, "Largest power index")->capture_default_str();
    bench->add_option("--repetitions", reps, "Timed runs per measurement (median reported)")->capture_default_str();
    detail::add_common(bench, opt, "");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*frob) return cmd_frobenius(a, b, opt, out);
        if (*check) return cmd_check(a, b, n, opt, out);
        if (*gaps) return cmd_gaps(a, b, opt, out);
        if (*sums) return cmd_sums(a, b, m, opt, out);
        if (*verify) return cmd_verify(pairs_up_to, m_up_to, inject_fault, opt, out, err);
        if (*bench) return cmd_bench(pairs_file, bench_m, reps, opt, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violation: " << e.what() << "\n" << e.diagnostics();
        return kInvariantViolation;
    }
    return kInputError;
}

}  // namespace sylv::cli
