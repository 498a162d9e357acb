#pragma once

/*
 * Exact integer and rational arithmetic for the Sylvester-sum pipeline.
 *
 * BigInt is Boost.Multiprecision's cpp_int. Rational is kept in lowest terms
 * with a positive denominator, zero being 0/1.
 *
 * Bernoulli numbers follow the convention B_1 = +1/2, i.e. they are the
 * solution of
 *
 *     sum_{j=0}^{k} C(k+1, j) B_j = k + 1,    k = 0, 1, 2, ...
 *
 * With that convention sum_{i=1}^{N} i^k = 1/(k+1) sum_{j=0}^{k} C(k+1,j) B_j N^{k+1-j}.
 */

#include <cstdint>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sylv/errors.hpp"

namespace sylv {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// base^exp with 0^0 = 1.
inline BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

// Least nonnegative residue of v modulo m (m > 0).
inline BigInt mod_floor(const BigInt& v, const BigInt& m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of `value` modulo `modulus` in [0, modulus); 0 when modulus == 1.
// Extended Euclid; requires gcd(value, modulus) = 1.
inline BigInt mod_inverse(const BigInt& value, const BigInt& modulus) {
    if (modulus <= 0) throw InputError("mod_inverse: modulus must be positive");
    if (modulus == 1) return 0;
    BigInt old_r = mod_floor(value, modulus), r = modulus;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_s - q * s;
        old_s = std::move(s);
        s = std::move(t);
    }
    if (old_r != 1) throw NotCoprime("mod_inverse: " + value.str() + " is not invertible modulo " + modulus.str());
    return mod_floor(old_s, modulus);
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }

    // "p/q", or "p" when q = 1.
    std::string str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
    friend Rational operator-(Rational v) {
        v.num_ = -v.num_;
        return v;
    }

    // Both operands are normalized, so componentwise equality is exact.
    friend bool operator==(const Rational& l, const Rational& r) { return l.num_ == r.num_ && l.den_ == r.den_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    auto kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    BigInt result = 1;
    // result stays C(n - kk + i, i) after step i, so each division is exact.
    for (std::uint64_t i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

class BernoulliTable {
public:
    BernoulliTable() = default;
    explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

    const Rational& operator[](std::size_t j) const { return values_.at(j); }
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t k_max() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
    const std::vector<Rational>& values() const noexcept { return values_; }

private:
    std::vector<Rational> values_;
};

namespace detail {

struct BernoulliMemo {
    std::mutex mutex;
    std::vector<Rational> values;
};

inline BernoulliMemo& bernoulli_memo() {
    static BernoulliMemo memo;
    return memo;
}

}  // namespace detail

// B_0..B_{k_max}. Values are memoized process-wide; larger requests extend the memo.
inline BernoulliTable bernoulli_table(unsigned k_max) {
    auto& memo = detail::bernoulli_memo();
    std::lock_guard lock(memo.mutex);
    auto& b = memo.values;
    for (std::size_t k = b.size(); k <= k_max; ++k) {
        Rational acc(static_cast<std::int64_t>(k + 1));
        for (std::size_t j = 0; j < k; ++j) acc -= Rational(binomial(k + 1, static_cast<std::int64_t>(j))) * b[j];
        acc /= Rational(static_cast<std::int64_t>(k + 1));
        b.push_back(std::move(acc));
    }
    return BernoulliTable(std::vector<Rational>(b.begin(), b.begin() + k_max + 1));
}

// 1/(k+1) * sum_{j=0}^{k} C(k+1, j) B_j N^{k+1-j}, exactly; equals sum_{i=1}^{N} i^k.
inline Rational bernoulli_power_sum_rational(const BigInt& N, unsigned k) {
    const BernoulliTable bern = bernoulli_table(k);
    Rational acc;
    for (unsigned j = 0; j <= k; ++j) {
        if (bern[j].numerator() == 0) continue;
        acc += Rational(binomial(k + 1, j) * ipow(N, k + 1 - j)) * bern[j];
    }
    acc /= Rational(static_cast<std::int64_t>(k) + 1);
    return acc;
}

// sum_{i=1}^{N} i^k via the Bernoulli formula.
inline BigInt power_sum(const BigInt& N, unsigned k) {
    if (N < 0) throw InputError("power_sum: N must be nonnegative");
    Rational r = bernoulli_power_sum_rational(N, k);
    if (!r.is_integer())
        throw InvariantViolation("power_sum: non-integral Faulhaber value",
                                 "N=" + N.str() + " k=" + std::to_string(k) + " value=" + r.str());
    return r.numerator();
}

// sum_{t=0}^{N} t^k with 0^0 = 1.
inline BigInt power_sum_inclusive_zero(const BigInt& N, unsigned k) {
    BigInt s = power_sum(N, k);
    if (k == 0) s += 1;
    return s;
}

}  // namespace sylv
