#pragma once

// Representability of n as a*x + b*y (x, y >= 0) for a coprime pair (a, b).
//
// Three independent routes are provided:
//   - count_representations: closed-form count from the residues
//     a1 = n a^{-1} mod b, b1 = n b^{-1} mod a:  N = 1 + (n - a a1 - b b1) / (ab).
//   - is_representable_division: division-algorithm criterion with b = a q0 + r0.
//   - count_representations_oracle: brute-force loop over y.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "sylv/errors.hpp"
#include "sylv/exact_math.hpp"

namespace sylv {

class CoprimePair {
public:
    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    const BigInt& ab() const noexcept { return ab_; }
    const BigInt& a_inv_mod_b() const noexcept { return a_inv_mod_b_; }
    const BigInt& b_inv_mod_a() const noexcept { return b_inv_mod_a_; }

    std::string str() const { return "(" + a_.str() + "," + b_.str() + ")"; }

    friend bool operator==(const CoprimePair& l, const CoprimePair& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

private:
    friend CoprimePair make_pair(const BigInt& a, const BigInt& b);
    CoprimePair() = default;

    BigInt a_, b_, ab_;
    BigInt a_inv_mod_b_, b_inv_mod_a_;
};

// Validates positivity and coprimality and precomputes both modular inverses.
// Orientation is preserved: make_pair(5, 3) and make_pair(3, 5) are distinct pairs.
// Call as sylv::make_pair; unqualified calls with integer literals resolve to std::make_pair.
inline CoprimePair make_pair(const BigInt& a, const BigInt& b) {
    if (a <= 0 || b <= 0) throw NonPositive("a and b must be positive, got (" + a.str() + "," + b.str() + ")");
    if (boost::multiprecision::gcd(a, b) != 1) throw NotCoprime("not coprime: gcd(" + a.str() + "," + b.str() + ") != 1");
    CoprimePair p;
    p.a_ = a;
    p.b_ = b;
    p.ab_ = a * b;
    p.a_inv_mod_b_ = mod_inverse(a, b);
    p.b_inv_mod_a_ = mod_inverse(b, a);
    return p;
}

struct ResiduePair {
    BigInt a1;  // in [0, b)
    BigInt b1;  // in [0, a)
    friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
};

struct RepWitness {
    BigInt x;  // minimal: 0 <= x < b
    BigInt y;
    friend bool operator==(const RepWitness&, const RepWitness&) = default;
};

// n = a*a1 + b*b1 - ab > 0.
struct GapCertificate {
    BigInt a1;
    BigInt b1;
    friend bool operator==(const GapCertificate&, const GapCertificate&) = default;
};

struct DivisionCriterionData {
    BigInt q0;   // b = a*q0 + r0
    BigInt r0;   // 0 < r0 < a
    BigInt r;    // m mod a
    BigInt r_m;  // r mod r0
    BigInt k_m;  // -a^{-1} r_m mod r0, inverse taken modulo r0
    bool holds = false;
};

namespace detail {

inline void require_nonnegative(const BigInt& n, const char* what) {
    if (n < 0) throw InputError(std::string(what) + ": n must be nonnegative, got " + n.str());
}

}  // namespace detail

inline ResiduePair residues(const CoprimePair& pair, const BigInt& n) {
    detail::require_nonnegative(n, "residues");
    return {mod_floor(n * pair.a_inv_mod_b(), pair.b()), mod_floor(n * pair.b_inv_mod_a(), pair.a())};
}

inline BigInt count_representations(const CoprimePair& pair, const BigInt& n) {
    const ResiduePair res = residues(pair, n);
    const BigInt diff = n - pair.a() * res.a1 - pair.b() * res.b1;
    BigInt q, rem;
    boost::multiprecision::divide_qr(diff, pair.ab(), q, rem);
    if (rem != 0)
        throw InvariantViolation("count_representations: inexact division",
                                 "pair=" + pair.str() + " n=" + n.str() + " numerator=" + diff.str());
    BigInt count = q + 1;
    if (count < 0)
        throw InvariantViolation("count_representations: negative count",
                                 "pair=" + pair.str() + " n=" + n.str() + " count=" + count.str());
    return count;
}

// Counts y in [0, floor(n/b)] with a | (n - b*y).
inline BigInt count_representations_oracle(const CoprimePair& pair, const BigInt& n) {
    detail::require_nonnegative(n, "count_representations_oracle");
    constexpr auto limit = std::numeric_limits<std::int64_t>::max() / 4;
    if (n <= limit && pair.ab() <= limit) {
        const auto nn = static_cast<std::int64_t>(n);
        const auto a = static_cast<std::int64_t>(pair.a());
        const auto b = static_cast<std::int64_t>(pair.b());
        std::int64_t count = 0;
        for (std::int64_t y = 0; b * y <= nn; ++y)
            if ((nn - b * y) % a == 0) ++count;
        return count;
    }
    BigInt count = 0;
    for (BigInt y = 0; pair.b() * y <= n; ++y)
        if ((n - pair.b() * y) % pair.a() == 0) ++count;
    return count;
}

// floor(m/a) >= q0*m/b + k_m, compared as floor(m/a)*b >= q0*m + k_m*b.
inline DivisionCriterionData is_representable_division(const CoprimePair& pair, const BigInt& m) {
    detail::require_nonnegative(m, "is_representable_division");
    const BigInt& a = pair.a();
    const BigInt& b = pair.b();
    if (a == 1) throw UnsupportedPair("division criterion requires a >= 2 (a = 1 represents every n)");
    DivisionCriterionData d;
    boost::multiprecision::divide_qr(b, a, d.q0, d.r0);
    if (d.r0 == 0) throw InvariantViolation("division criterion: r0 = 0 for a coprime pair", "pair=" + pair.str());
    d.r = m % a;
    if (d.r0 == 1) {
        d.r_m = 0;
        d.k_m = 0;
    } else {
        d.r_m = d.r % d.r0;
        d.k_m = mod_floor(-mod_inverse(a, d.r0) * d.r_m, d.r0);
    }
    d.holds = (m / a) * b >= d.q0 * m + d.k_m * b;
    return d;
}

inline std::optional<RepWitness> witness(const CoprimePair& pair, const BigInt& n) {
    if (count_representations(pair, n) == 0) return std::nullopt;
    const ResiduePair res = residues(pair, n);
    return RepWitness{res.a1, (n - pair.a() * res.a1) / pair.b()};
}

inline std::optional<GapCertificate> gap_certificate(const CoprimePair& pair, const BigInt& n) {
    if (count_representations(pair, n) != 0) return std::nullopt;
    const ResiduePair res = residues(pair, n);
    return GapCertificate{res.a1, res.b1};
}

}  // namespace sylv
