#pragma once

// Sylvester power sums S_m(a,b) = sum over gaps n of n^m.
//
// The recursive route never touches the grid. For m >= 1 it solves
//
//   m ab S_{m-1} = G_m
//                - m ab        sum_{j=1}^{m-1} C(m-1,j) (ab)^j S_{m-1-j}
//                + sum_{i=2}^{m} (-1)^i C(m,i) (ab)^i P_{m-i}
//                - sum_{n=0}^{ab-1} n^m
//
// where G_m = sum over the grid of (a a1 + b b1)^m (closed form from power
// sums, see grid_power_sum), P_k = sum_{j=0}^{k} C(k,j) (ab)^j S_{k-j}, and
// the last term is evaluated as a Bernoulli polynomial in ab - 1.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sylv/errors.hpp"
#include "sylv/exact_math.hpp"
#include "sylv/gaps.hpp"
#include "sylv/representability.hpp"

namespace sylv {

enum class SumMethod { recursive, enumerate };

inline std::string_view to_string(SumMethod m) { return m == SumMethod::recursive ? "recursive" : "enumerate"; }

struct SumTable {
    CoprimePair pair;
    unsigned max_index = 0;
    std::vector<BigInt> values;  // S_0..S_{max_index}
    SumMethod method = SumMethod::recursive;
};

// G_m = sum_{i=0}^{m} C(m,i) a^i b^{m-i} T_i(b-1) T_{m-i}(a-1), T_k(N) = sum_{t=0}^{N} t^k.
inline BigInt grid_power_sum(const CoprimePair& pair, unsigned m) {
    std::vector<BigInt> ta(m + 1), tb(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
        ta[k] = power_sum_inclusive_zero(pair.b() - 1, k);  // a1 ranges over [0, b)
        tb[k] = power_sum_inclusive_zero(pair.a() - 1, k);  // b1 ranges over [0, a)
    }
    BigInt total = 0;
    for (unsigned i = 0; i <= m; ++i)
        total += binomial(m, i) * ipow(pair.a(), i) * ipow(pair.b(), m - i) * ta[i] * tb[m - i];
    return total;
}

// Literal double loop over the grid.
inline BigInt grid_power_sum_oracle(const CoprimePair& pair, unsigned m, std::uint64_t max_cells = kDefaultMaxCells) {
    detail::checked_cells(pair, max_cells, "grid_power_sum_oracle");
    BigInt total = 0;
    for (BigInt a1 = 0; a1 < pair.b(); ++a1)
        for (BigInt b1 = 0; b1 < pair.a(); ++b1) total += ipow(pair.a() * a1 + pair.b() * b1, m);
    return total;
}

inline BigInt s0_closed(const CoprimePair& pair) { return (pair.a() - 1) * (pair.b() - 1) / 2; }

inline BigInt s1_closed(const CoprimePair& pair) {
    const BigInt& a = pair.a();
    const BigInt& b = pair.b();
    const BigInt num = (a - 1) * (b - 1) * (2 * a * b - a - b - 1);
    if (num % 12 != 0) throw InvariantViolation("s1_closed: numerator not divisible by 12", "pair=" + pair.str());
    return num / 12;
}

inline SumTable sylvester_sums_recursive(const CoprimePair& pair, unsigned m_max) {
    const BigInt& ab = pair.ab();
    const unsigned top = m_max + 1;

    std::vector<BigInt> ab_pow(top + 1);
    ab_pow[0] = 1;
    for (unsigned j = 1; j <= top; ++j) ab_pow[j] = ab_pow[j - 1] * ab;

    const BernoulliTable bern = bernoulli_table(top);
    const BigInt ab_minus_1 = ab - 1;

    std::vector<BigInt> s;
    s.reserve(top);
    const BigInt s0_base = s0_closed(pair);

    // P_k; only k <= m-2 is requested at step m, so every S it reads is already known.
    auto grid_chi_sum = [&](unsigned k) {
        BigInt p = 0;
        for (unsigned j = 0; j <= k; ++j) p += binomial(k, j) * ab_pow[j] * s[k - j];
        return p;
    };

    for (unsigned m = 1; m <= top; ++m) {
        const BigInt g = grid_power_sum(pair, m);

        BigInt second = 0;
        for (unsigned j = 1; j + 1 <= m; ++j) second += binomial(m - 1, j) * ab_pow[j] * s[m - 1 - j];
        second *= m * ab;

        BigInt third = 0;
        for (unsigned i = 2; i <= m; ++i) {
            BigInt term = binomial(m, i) * ab_pow[i] * grid_chi_sum(m - i);
            if (i % 2 == 0)
                third += term;
            else
                third -= term;
        }

        Rational bern_sum;
        for (unsigned j = 0; j <= m; ++j) {
            if (bern[j].numerator() == 0) continue;
            bern_sum += Rational(binomial(m + 1, j) * ipow(ab_minus_1, m + 1 - j)) * bern[j];
        }
        bern_sum /= Rational(static_cast<std::int64_t>(m) + 1);

        auto dump = [&](const std::string& extra) {
            std::ostringstream os;
            os << "pair=" << pair.str() << " m=" << m << "\n"
               << "  grid_sum=" << g << "\n"
               << "  second=" << second << "\n"
               << "  third=" << third << "\n"
               << "  bernoulli_term=" << bern_sum << "\n";
            for (std::size_t k = 0; k < s.size(); ++k) os << "  S_" << k << "=" << s[k] << "\n";
            os << extra;
            return os.str();
        };

        if (!bern_sum.is_integer()) throw InvariantViolation("sylvester_sums_recursive: Bernoulli term not integral", dump(""));

        const BigInt rhs = g - second + third - bern_sum.numerator();
        const BigInt divisor = m * ab;
        BigInt value, rem;
        boost::multiprecision::divide_qr(rhs, divisor, value, rem);
        if (rem != 0)
            throw InvariantViolation("sylvester_sums_recursive: right-hand side not divisible by m*a*b",
                                     dump("  rhs=" + rhs.str() + "\n  divisor=" + divisor.str() + "\n"));
        if (value < 0)
            throw InvariantViolation("sylvester_sums_recursive: negative Sylvester sum", dump("  S=" + value.str() + "\n"));
        if (m == 1 && value != s0_base)
            throw InvariantViolation("sylvester_sums_recursive: recursion disagrees with (a-1)(b-1)/2",
                                     dump("  recursion S_0=" + value.str() + "\n  closed S_0=" + s0_base.str() + "\n"));
        s.push_back(value);
    }
    return SumTable{pair, m_max, std::move(s), SumMethod::recursive};
}

// S_0..S_{m_max} by summing powers of the sieve-enumerated gaps.
inline SumTable sylvester_sums_enumerate(const CoprimePair& pair, unsigned m_max, std::uint64_t max_cells = kDefaultMaxCells) {
    const GapSet gaps = enumerate_gaps_sieve(pair, max_cells);
    std::vector<BigInt> s(m_max + 1, BigInt(0));
    for (std::uint64_t n : gaps.elements) {
        BigInt p = 1;
        const BigInt nn = n;
        for (unsigned k = 0; k <= m_max; ++k) {
            s[k] += p;
            p *= nn;
        }
    }
    return SumTable{pair, m_max, std::move(s), SumMethod::enumerate};
}

inline BigInt sylvester_sum_enumerate(const CoprimePair& pair, unsigned m, std::uint64_t max_cells = kDefaultMaxCells) {
    const GapSet gaps = enumerate_gaps_sieve(pair, max_cells);
    BigInt total = 0;
    for (std::uint64_t n : gaps.elements) total += ipow(BigInt(n), m);
    return total;
}

inline SumTable sylvester_sums(const CoprimePair& pair, unsigned m_max, SumMethod method,
                               std::uint64_t max_cells = kDefaultMaxCells) {
    return method == SumMethod::recursive ? sylvester_sums_recursive(pair, m_max)
                                          : sylvester_sums_enumerate(pair, m_max, max_cells);
}

}  // namespace sylv
