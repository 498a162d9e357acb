// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sylv/cli.hpp"
#include "sylv/sylv.hpp"

namespace {

using sylv::BigInt;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const sylv::InvariantViolation& e) {
        out.ok = false;
        out.detail = std::string("invariant violation: ") + e.what() + "\n" + e.diagnostics();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (time_limit_s > 0 && secs >= time_limit_s) {
        out.ok = false;
        if (out.detail.empty()) out.detail = "runtime limit " + std::to_string(time_limit_s) + " s exceeded";
    }
    if (!out.ok) ++failures;
    std::printf("[%s] AC%-2d %-66s %8.3f s%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                out.detail.empty() ? "" : "  -- ", out.detail.c_str());
    std::fflush(stdout);
}

template <class Fn>
void for_each_coprime(std::int64_t bound, Fn&& fn) {
    for (std::int64_t a = 1; a <= bound; ++a)
        for (std::int64_t b = 1; b <= bound; ++b)
            if (std::gcd(a, b) == 1) fn(a, b, sylv::make_pair(a, b));
}

std::string pair_str(std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = sylv::cli::run_cli(args, out, err);
    return {code, out.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    criterion(1, "Sylvester number |NR(a,b)| = (a-1)(b-1)/2, a,b <= 60", 10.0, [](Outcome& o) {
        for_each_coprime(60, [&](std::int64_t a, std::int64_t b, const sylv::CoprimePair& p) {
            const auto g = sylv::enumerate_gaps_sieve(p);
            o.require(g.elements == sylv::oracle::gaps(a, b), "gap set differs from brute force at " + pair_str(a, b));
            o.require(BigInt(g.elements.size()) == BigInt((a - 1) * (b - 1) / 2), "count mismatch at " + pair_str(a, b));
            o.require(sylv::sylvester_number(p) == BigInt((a - 1) * (b - 1) / 2), "formula mismatch at " + pair_str(a, b));
        });
    });

    criterion(2, "Frobenius number max gap = ab-a-b, a,b <= 60", 0, [](Outcome& o) {
        for_each_coprime(60, [&](std::int64_t a, std::int64_t b, const sylv::CoprimePair& p) {
            const auto g = sylv::enumerate_gaps_sieve(p);
            if (a == 1 || b == 1) {
                o.require(g.elements.empty() && g.frobenius == -1, "degenerate pair " + pair_str(a, b));
                return;
            }
            o.require(!g.elements.empty() && g.elements.back() == static_cast<std::uint64_t>(a * b - a - b),
                      "max gap mismatch at " + pair_str(a, b));
            o.require(sylv::frobenius(p) == BigInt(a * b - a - b), "formula mismatch at " + pair_str(a, b));
        });
    });

    criterion(3, "Worked pair (3,5): gaps {1,2,4,7}, S_0..S_3 = 4,14,70,416", 1.0, [](Outcome& o) {
        const auto p = sylv::make_pair(3, 5);
        const std::vector<std::uint64_t> gaps{1, 2, 4, 7};
        o.require(sylv::enumerate_gaps_chi(p).elements == gaps, "chi-grid gaps");
        o.require(sylv::enumerate_gaps_sieve(p).elements == gaps, "sieve gaps");
        const std::vector<BigInt> expected{4, 14, 70, 416};
        o.require(sylv::sylvester_sums_recursive(p, 3).values == expected, "recursive sums");
        o.require(sylv::sylvester_sums_enumerate(p, 3).values == expected, "enumerated sums");
        for (unsigned m = 0; m <= 3; ++m) o.require(sylv::sylvester_sum_enumerate(p, m) == expected[m], "single enumerated sum");
        o.require(sylv::s0_closed(p) == 4 && sylv::s1_closed(p) == 14, "closed forms S_0, S_1");
    });

    criterion(4, "Representation count = brute force, a,b <= 50, n <= ab+a+b", 60.0, [](Outcome& o) {
        for_each_coprime(50, [&](std::int64_t a, std::int64_t b, const sylv::CoprimePair& p) {
            for (std::int64_t n = 0; n <= a * b + a + b && o.ok; ++n)
                o.require(sylv::count_representations(p, n) == sylv::oracle::count(a, b, n),
                          "mismatch at " + pair_str(a, b) + " n=" + std::to_string(n));
        });
    });

    criterion(5, "Division criterion = brute force; a+1 / a+2 special cases", 60.0, [](Outcome& o) {
        for_each_coprime(50, [&](std::int64_t a, std::int64_t b, const sylv::CoprimePair& p) {
            if (a < 2) return;
            for (std::int64_t n = 0; n <= a * b + a + b && o.ok; ++n)
                o.require(sylv::is_representable_division(p, n).holds == sylv::oracle::representable(a, b, n),
                          "mismatch at " + pair_str(a, b) + " m=" + std::to_string(n));
        });
        for (std::int64_t a = 2; a <= 30; ++a) {
            const auto report = sylv::check_special_cases(a, a * (a + 2));
            const auto* bad = report.first_failure();
            o.require(bad == nullptr, bad ? bad->name + " [" + bad->parameters + "]" : "");
        }
    });

    criterion(6, "Bijection onto [0,ab), no zero on the grid, a,b <= 60", 0, [](Outcome& o) {
        for_each_coprime(60, [&](std::int64_t a, std::int64_t b, const sylv::CoprimePair& p) {
            const auto rec = sylv::evaluate_bijection(p);
            o.require(rec.passed, "failed at " + pair_str(a, b) + ": " + rec.lhs + " vs " + rec.rhs);
        });
    });

    criterion(7, "Recursion = enumeration, a,b <= 40, m <= 8", 120.0, [](Outcome& o) {
        for_each_coprime(40, [&](std::int64_t a, std::int64_t b, const sylv::CoprimePair& p) {
            o.require(sylv::sylvester_sums_recursive(p, 8).values == sylv::sylvester_sums_enumerate(p, 8).values,
                      "mismatch at " + pair_str(a, b));
        });
    });

    criterion(8, "Alternating identity n <= 30; binomial transform pairs <= 20", 0, [](Outcome& o) {
        for (std::uint64_t n = 1; n <= 30; ++n)
            for (std::uint64_t m = 1; m <= n; ++m)
                o.require(sylv::check_alternating_identity(n, m), "n=" + std::to_string(n) + " m=" + std::to_string(m));
        for_each_coprime(20, [&](std::int64_t a, std::int64_t b, const sylv::CoprimePair& p) {
            for (unsigned n = 0; n <= 6; ++n)
                o.require(sylv::check_binomial_transform(p, n), pair_str(a, b) + " n=" + std::to_string(n));
        });
    });

    criterion(9, "Bernoulli B_0..B_4 = 1, 1/2, 1/6, 0, -1/30; recursion k <= 20", 0, [](Outcome& o) {
        const auto t = sylv::bernoulli_table(20);
        const std::vector<std::string> expected{"1", "1/2", "1/6", "0", "-1/30"};
        for (std::size_t j = 0; j < expected.size(); ++j)
            o.require(t[j].str() == expected[j], "B_" + std::to_string(j) + " = " + t[j].str());
        for (unsigned k = 0; k <= 20; ++k) {
            sylv::Rational lhs;
            for (unsigned j = 0; j <= k; ++j) lhs += sylv::Rational(sylv::binomial(k + 1, j)) * t[j];
            o.require(lhs == sylv::Rational(static_cast<std::int64_t>(k) + 1), "recursion fails at k=" + std::to_string(k));
        }
    });

    criterion(10, "Bench: (10007,10009) recursive < 1 s, enumeration skipped", 0, [](Outcome& o) {
        const auto big = sylv::run_bench({sylv::make_pair(10007, 10009)}, 5, 1);
        o.require(big.rows.size() == 2, "unexpected row count");
        if (!o.ok) return;
        o.require(big.rows[0].method == "recursive" && big.rows[0].status == "ok", "recursive row");
        o.require(big.rows[0].wall_time_ns && *big.rows[0].wall_time_ns < 1'000'000'000ULL, "recursive pipeline too slow");
        o.require(big.rows[1].method == "enumerate" && big.rows[1].status == "skipped_over_bound", "enumeration not skipped");

        // run_bench throws BenchMismatch if any S_k differs between methods.
        const auto small = sylv::run_bench({sylv::make_pair(101, 103)}, 5, 1);
        o.require(small.rows.size() == 2 && small.rows[1].status == "ok", "(101,103) enumeration did not run");
        if (!o.ok) return;
        o.require(small.rows[0].value_digits == small.rows[1].value_digits, "(101,103) digit counts differ");
        const auto p = sylv::make_pair(101, 103);
        o.require(sylv::sylvester_sums_recursive(p, 5).values[5].str() == sylv::sylvester_sum_enumerate(p, 5).str(),
                  "(101,103) S_5 differs");
    });

    criterion(11, "CLI golden files byte-stable; exit-code contract", 0, [](Outcome& o) {
        const std::filesystem::path dir(SYLV_GOLDEN_DIR);
        struct Case {
            std::vector<std::string> args;
            std::string golden;
            int code;
        };
        const std::vector<Case> cases{
            {{"gaps", "3", "5", "--format", "json"}, "gaps_3_5.json", 0},
            {{"gaps", "3", "5", "--format", "csv"}, "gaps_3_5.csv", 0},
            {{"sums", "3", "5", "3", "--format", "json"}, "sums_3_5_3.json", 0},
            {{"sums", "3", "5", "3", "--format", "csv"}, "sums_3_5_3.csv", 0},
            {{"check", "3", "5", "7", "--format", "json"}, "check_3_5_7.json", 1},
            {{"check", "3", "5", "7", "--format", "csv"}, "check_3_5_7.csv", 1},
        };
        for (const auto& c : cases) {
            const auto first = cli(c.args);
            const auto second = cli(c.args);
            o.require(first.out == second.out, c.golden + " not byte-stable");
            o.require(first.out == slurp(dir / c.golden), c.golden + " differs from golden file");
            o.require(first.code == c.code, c.golden + " exit code " + std::to_string(first.code));
        }
        o.require(cli({"check", "3", "5", "8"}).code == 0, "representable -> 0");
        o.require(cli({"frobenius", "4", "6"}).code == 2, "not coprime -> 2");
        o.require(cli({"check", "1", "5", "3", "--method", "division"}).code == 2, "division with a=1 -> 2");
        o.require(cli({"gaps", "10007", "10009", "--method", "chi"}).code == 3, "over bound -> 3");
        o.require(cli({"verify", "--pairs-up-to", "4", "--m-up-to", "2", "--inject-chi-fault"}).code == 1, "verify failure -> 1");
        o.require(cli({"verify", "--pairs-up-to", "2"}).code == 0, "verify pass -> 0");
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
