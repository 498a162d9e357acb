#pragma once

// Nonrepresentable numbers NR(a,b), Frobenius number g = ab - a - b and
// Sylvester number n = (a-1)(b-1)/2.
//
// Two enumerations:
//   chi_grid - walks the residue grid a1 in [0,b), b1 in [0,a) and keeps every
//              a*a1 + b*b1 - ab that is positive. Each gap appears exactly once.
//   sieve    - forward reachability from 0 with steps a and b over [0, ab).

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sylv/errors.hpp"
#include "sylv/exact_math.hpp"
#include "sylv/representability.hpp"

namespace sylv {

inline constexpr std::uint64_t kDefaultMaxCells = 100'000'000;

enum class GapMethod { chi_grid, sieve };

inline std::string_view to_string(GapMethod m) { return m == GapMethod::chi_grid ? "chi" : "sieve"; }

struct GapSet {
    CoprimePair pair;
    std::vector<std::uint64_t> elements;  // strictly increasing
    BigInt frobenius;
    BigInt cardinality;
    GapMethod method;
};

inline BigInt frobenius(const CoprimePair& pair) { return pair.ab() - pair.a() - pair.b(); }

inline BigInt sylvester_number(const CoprimePair& pair) { return (pair.a() - 1) * (pair.b() - 1) / 2; }

namespace detail {

// Returns ab as a machine word after checking it against the cell bound.
inline std::uint64_t checked_cells(const CoprimePair& pair, std::uint64_t max_cells, std::string_view what) {
    if (pair.ab() > max_cells || pair.ab() > (std::uint64_t{1} << 62))
        throw ResourceLimit(std::string(what) + ": a*b = " + pair.ab().str() + " exceeds the cell bound " +
                            std::to_string(max_cells));
    return static_cast<std::uint64_t>(pair.ab());
}

inline GapSet finish_gap_set(const CoprimePair& pair, std::vector<std::uint64_t> elements, GapMethod method) {
    GapSet set{pair, std::move(elements), frobenius(pair), 0, method};
    set.cardinality = set.elements.size();
    return set;
}

}  // namespace detail

inline GapSet enumerate_gaps_chi(const CoprimePair& pair, std::uint64_t max_cells = kDefaultMaxCells) {
    detail::checked_cells(pair, max_cells, "enumerate_gaps_chi");
    const auto a = static_cast<std::int64_t>(pair.a());
    const auto b = static_cast<std::int64_t>(pair.b());
    const std::int64_t ab = a * b;
    const auto expected = static_cast<std::size_t>(sylvester_number(pair));

    std::vector<std::uint64_t> gaps;
    gaps.reserve(expected);
    for (std::int64_t a1 = 0; a1 < b; ++a1) {
        for (std::int64_t b1 = 0; b1 < a; ++b1) {
            const std::int64_t v = a * a1 + b * b1 - ab;
            if (v == 0)
                throw InvariantViolation("enumerate_gaps_chi: a*a1 + b*b1 - ab = 0 on the grid",
                                         "pair=" + pair.str() + " a1=" + std::to_string(a1) + " b1=" + std::to_string(b1));
            if (v > 0) gaps.push_back(static_cast<std::uint64_t>(v));
        }
    }
    if (gaps.size() != expected)
        throw InvariantViolation("enumerate_gaps_chi: gap count differs from (a-1)(b-1)/2",
                                 "pair=" + pair.str() + " found=" + std::to_string(gaps.size()) +
                                     " expected=" + std::to_string(expected));
    std::sort(gaps.begin(), gaps.end());
    if (auto dup = std::adjacent_find(gaps.begin(), gaps.end()); dup != gaps.end())
        throw InvariantViolation("enumerate_gaps_chi: duplicate gap", "pair=" + pair.str() + " value=" + std::to_string(*dup));
    return detail::finish_gap_set(pair, std::move(gaps), GapMethod::chi_grid);
}

inline GapSet enumerate_gaps_sieve(const CoprimePair& pair, std::uint64_t max_cells = kDefaultMaxCells) {
    const std::uint64_t cells = detail::checked_cells(pair, max_cells, "enumerate_gaps_sieve");
    const auto a = static_cast<std::uint64_t>(pair.a());
    const auto b = static_cast<std::uint64_t>(pair.b());

    std::vector<bool> reachable(cells, false);
    reachable[0] = true;
    for (std::uint64_t v = 0; v < cells; ++v) {
        if (!reachable[v]) continue;
        if (v + a < cells) reachable[v + a] = true;
        if (v + b < cells) reachable[v + b] = true;
    }
    std::vector<std::uint64_t> gaps;
    for (std::uint64_t v = 1; v < cells; ++v)
        if (!reachable[v]) gaps.push_back(v);
    return detail::finish_gap_set(pair, std::move(gaps), GapMethod::sieve);
}

inline GapSet enumerate_gaps(const CoprimePair& pair, GapMethod method, std::uint64_t max_cells = kDefaultMaxCells) {
    return method == GapMethod::chi_grid ? enumerate_gaps_chi(pair, max_cells) : enumerate_gaps_sieve(pair, max_cells);
}

}  // namespace sylv
