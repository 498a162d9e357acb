#pragma once

// Executable checkers for the supporting identities of the Sylvester-sum
// recursion. Each evaluate_* returns a CheckRecord carrying both sides as
// decimal strings; the check_* wrappers return only the verdict.
//
// chi is always derived from the sign of a*a1 + b*b1 - ab, never from the
// representation count, so these checks stay independent of the residue
// formula in representability.hpp.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sylv/errors.hpp"
#include "sylv/exact_math.hpp"
#include "sylv/gaps.hpp"
#include "sylv/representability.hpp"
#include "sylv/sylvester_sums.hpp"

namespace sylv {

struct CheckRecord {
    std::string name;
    std::string parameters;
    bool passed = false;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::vector<CheckRecord> checks;
    bool all_passed = true;

    void add(CheckRecord rec) {
        all_passed = all_passed && rec.passed;
        checks.push_back(std::move(rec));
    }
    void append(const VerifyReport& other) {
        for (const auto& c : other.checks) add(c);
    }
    const CheckRecord* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

struct CheckOptions {
    std::uint64_t max_cells = kDefaultMaxCells;
    // Fault injection for the verify harness: flips the chi indicator.
    bool invert_chi = false;
};

namespace detail {

inline bool chi(const BigInt& shifted, const CheckOptions& opt) {
    const bool gap = shifted > 0;
    return opt.invert_chi ? !gap : gap;
}

inline std::string pair_params(const CoprimePair& p) { return "a=" + p.a().str() + ",b=" + p.b().str(); }

}  // namespace detail

// sum_{i=1}^{m} (-1)^{i+1} C(n,i) C(n-i,m-i) = C(n,m), n >= m >= 1.
inline CheckRecord evaluate_alternating_identity(std::uint64_t n, std::uint64_t m) {
    if (m < 1 || n < m) throw InputError("alternating identity requires n >= m >= 1");
    BigInt lhs = 0;
    for (std::uint64_t i = 1; i <= m; ++i) {
        BigInt term = binomial(n, static_cast<std::int64_t>(i)) * binomial(n - i, static_cast<std::int64_t>(m - i));
        if (i % 2 == 1)
            lhs += term;
        else
            lhs -= term;
    }
    const BigInt rhs = binomial(n, static_cast<std::int64_t>(m));
    return {"alternating_identity", "n=" + std::to_string(n) + ",m=" + std::to_string(m), lhs == rhs, lhs.str(), rhs.str()};
}

inline bool check_alternating_identity(std::uint64_t n, std::uint64_t m) { return evaluate_alternating_identity(n, m).passed; }

// sum_grid (a a1 + b b1)^n chi = sum_{i=0}^{n} C(n,i) (ab)^i S_{n-i}.
inline CheckRecord evaluate_binomial_transform(const CoprimePair& pair, unsigned n, const CheckOptions& opt = {}) {
    detail::checked_cells(pair, opt.max_cells, "check_binomial_transform");
    BigInt lhs = 0;
    for (BigInt a1 = 0; a1 < pair.b(); ++a1) {
        for (BigInt b1 = 0; b1 < pair.a(); ++b1) {
            const BigInt v = pair.a() * a1 + pair.b() * b1;
            if (detail::chi(v - pair.ab(), opt)) lhs += ipow(v, n);
        }
    }
    const SumTable sums = sylvester_sums_enumerate(pair, n, opt.max_cells);
    BigInt rhs = 0;
    for (unsigned i = 0; i <= n; ++i) rhs += binomial(n, i) * ipow(pair.ab(), i) * sums.values[n - i];
    return {"binomial_transform", detail::pair_params(pair) + ",n=" + std::to_string(n), lhs == rhs, lhs.str(), rhs.str()};
}

inline bool check_binomial_transform(const CoprimePair& pair, unsigned n, const CheckOptions& opt = {}) {
    return evaluate_binomial_transform(pair, n, opt).passed;
}

// {a a1 + b b1 - ab chi} over the grid is exactly {0, ..., ab-1}, and
// a a1 + b b1 - ab never vanishes. lhs reports distinct in-range values, rhs = ab.
inline CheckRecord evaluate_bijection(const CoprimePair& pair, const CheckOptions& opt = {}) {
    const std::uint64_t cells = detail::checked_cells(pair, opt.max_cells, "check_bijection");
    const auto a = static_cast<std::int64_t>(pair.a());
    const auto b = static_cast<std::int64_t>(pair.b());
    const auto ab = static_cast<std::int64_t>(cells);
    std::vector<bool> seen(cells, false);
    std::uint64_t distinct = 0;
    bool ok = true;
    std::string note;
    for (std::int64_t a1 = 0; a1 < b && ok; ++a1) {
        for (std::int64_t b1 = 0; b1 < a; ++b1) {
            const std::int64_t shifted = a * a1 + b * b1 - ab;
            if (shifted == 0) {
                ok = false;
                note = " zero at a1=" + std::to_string(a1) + ",b1=" + std::to_string(b1);
                break;
            }
            const std::int64_t v = a * a1 + b * b1 - (detail::chi(shifted, opt) ? ab : 0);
            if (v < 0 || v >= ab || seen[static_cast<std::size_t>(v)]) {
                ok = false;
                note = " bad value " + std::to_string(v) + " at a1=" + std::to_string(a1) + ",b1=" + std::to_string(b1);
                break;
            }
            seen[static_cast<std::size_t>(v)] = true;
            ++distinct;
        }
    }
    ok = ok && distinct == cells;
    return {"bijection", detail::pair_params(pair), ok, std::to_string(distinct) + note, std::to_string(cells)};
}

inline bool check_bijection(const CoprimePair& pair, const CheckOptions& opt = {}) { return evaluate_bijection(pair, opt).passed; }

namespace detail {

inline bool brute_representable(std::int64_t a, std::int64_t b, std::int64_t m) {
    for (std::int64_t y = 0; b * y <= m; ++y)
        if ((m - b * y) % a == 0) return true;
    return false;
}

// Tallies agreement of `test` with brute force over m in [0, m_bound].
template <class Test>
CheckRecord tally(std::string name, std::int64_t a, std::int64_t b, std::int64_t m_bound, Test test) {
    std::int64_t agree = 0;
    std::string first_bad;
    for (std::int64_t m = 0; m <= m_bound; ++m) {
        if (test(m) == brute_representable(a, b, m))
            ++agree;
        else if (first_bad.empty())
            first_bad = ",first_mismatch_m=" + std::to_string(m);
    }
    const std::string params = "a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",m<=" + std::to_string(m_bound) + first_bad;
    return {std::move(name), params, agree == m_bound + 1, std::to_string(agree), std::to_string(m_bound + 1)};
}

}  // namespace detail

// Brute force vs. the (a, a+1) and, for odd a, (a, a+2) closed tests and vs. the
// general division criterion. Inequalities are cross-multiplied.
inline VerifyReport check_special_cases(std::int64_t a, std::int64_t m_bound) {
    if (a < 2) throw InputError("check_special_cases requires a >= 2");
    if (m_bound < 1) throw InputError("check_special_cases requires m_bound >= 1");
    VerifyReport report;

    const std::int64_t b1 = a + 1;
    const CoprimePair p1 = sylv::make_pair(a, b1);
    report.add(detail::tally("lemma_a_plus_1", a, b1, m_bound, [&](std::int64_t m) { return (m / a) * b1 >= m; }));
    report.add(detail::tally("division_a_plus_1", a, b1, m_bound,
                             [&](std::int64_t m) { return is_representable_division(p1, m).holds; }));

    if (a % 2 == 1) {
        const std::int64_t b2 = a + 2;
        const CoprimePair p2 = sylv::make_pair(a, b2);
        report.add(detail::tally("lemma_a_plus_2", a, b2, m_bound, [&](std::int64_t m) {
            const std::int64_t lhs = (m / a) * b2;
            return (m % a) % 2 == 0 ? lhs >= m : lhs >= m + b2;
        }));
        report.add(detail::tally("division_a_plus_2", a, b2, m_bound,
                                 [&](std::int64_t m) { return is_representable_division(p2, m).holds; }));
    }
    return report;
}

// sum_{j=0}^{k} C(k+1,j) B_j = k+1.
inline CheckRecord evaluate_bernoulli_recursion(unsigned k) {
    const BernoulliTable bern = bernoulli_table(k);
    Rational lhs;
    for (unsigned j = 0; j <= k; ++j) lhs += Rational(binomial(k + 1, j)) * bern[j];
    const Rational rhs(static_cast<std::int64_t>(k) + 1);
    return {"bernoulli_recursion", "k=" + std::to_string(k), lhs == rhs, lhs.str(), rhs.str()};
}

inline CheckRecord evaluate_recursion_vs_enumeration(const CoprimePair& pair, unsigned m_max, const CheckOptions& opt = {}) {
    const SumTable rec = sylvester_sums_recursive(pair, m_max);
    const SumTable en = sylvester_sums_enumerate(pair, m_max, opt.max_cells);
    auto join = [](const std::vector<BigInt>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].str();
        return s;
    };
    return {"recursion_vs_enumeration", detail::pair_params(pair) + ",m<=" + std::to_string(m_max), rec.values == en.values,
            join(rec.values), join(en.values)};
}

// Residue count vs brute force, and division criterion vs residue count, for n in [0, ab+a+b].
inline CheckRecord evaluate_representability_agreement(const CoprimePair& pair) {
    const BigInt top = pair.ab() + pair.a() + pair.b();
    std::uint64_t agree = 0, total = 0;
    for (BigInt n = 0; n <= top; ++n, ++total) {
        const BigInt c = count_representations(pair, n);
        bool ok = c == count_representations_oracle(pair, n);
        if (pair.a() >= 2) ok = ok && (is_representable_division(pair, n).holds == (c > 0));
        if (ok) ++agree;
    }
    return {"representability_agreement", detail::pair_params(pair), agree == total, std::to_string(agree), std::to_string(total)};
}

// Calls fn(pair) for every coprime pair with 1 <= a, b <= bound, ordered by (a, b).
template <class Fn>
void for_each_coprime_pair(std::int64_t bound, Fn&& fn) {
    for (std::int64_t a = 1; a <= bound; ++a)
        for (std::int64_t b = 1; b <= bound; ++b)
            if (std::gcd(a, b) == 1) fn(sylv::make_pair(a, b));
}

// Every identity sweep up to the given bounds, in a fixed order.
inline VerifyReport run_verify(std::int64_t pairs_up_to, unsigned m_up_to, const CheckOptions& opt = {}) {
    if (pairs_up_to < 1) throw InputError("verify: --pairs-up-to must be positive");
    if (m_up_to < 1) throw InputError("verify: --m-up-to must be positive");
    VerifyReport report;
    for (unsigned k = 0; k <= 20; ++k) report.add(evaluate_bernoulli_recursion(k));
    for (std::int64_t n = 1; n <= pairs_up_to; ++n)
        for (std::int64_t m = 1; m <= n; ++m)
            report.add(evaluate_alternating_identity(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)));
    for_each_coprime_pair(pairs_up_to, [&](const CoprimePair& p) {
        report.add(evaluate_bijection(p, opt));
        for (unsigned n = 0; n <= m_up_to; ++n) report.add(evaluate_binomial_transform(p, n, opt));
        report.add(evaluate_recursion_vs_enumeration(p, m_up_to, opt));
        report.add(evaluate_representability_agreement(p));
    });
    for (std::int64_t a = 2; a <= pairs_up_to; ++a) report.append(check_special_cases(a, a * (a + 2)));
    return report;
}

}  // namespace sylv
