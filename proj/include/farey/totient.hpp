#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "farey/checked.hpp"
#include "farey/error.hpp"

namespace farey {

inline constexpr std::uint64_t default_sieve_cap = 100'000'000;

/// Euler's totient by trial-division factorization. phi(1) = 1.
constexpr std::uint64_t phi(std::uint64_t n) {
    if (n == 0) throw invalid_argument("phi is defined for n >= 1");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p <= m / p; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// phi(1..limit), immutable once built.
class TotientTable {
public:
    std::uint64_t limit() const noexcept { return values_.size() - 1; }

    /// 1-based.
    std::uint64_t operator[](std::uint64_t k) const { return values_.at(k); }

    /// Entries for k = 1..limit.
    std::span<const std::uint32_t> values() const noexcept {
        return std::span<const std::uint32_t>(values_).subspan(1);
    }

private:
    explicit TotientTable(std::vector<std::uint32_t> v) : values_(std::move(v)) {}
    friend TotientTable phi_sieve(std::uint64_t limit, std::uint64_t cap);

    std::vector<std::uint32_t> values_;  // index 0 unused
};

/// Linear sieve: each composite i*p is visited once, with p the smallest
/// prime factor of i*p.
inline TotientTable phi_sieve(std::uint64_t limit, std::uint64_t cap = default_sieve_cap) {
    if (limit == 0) throw invalid_argument("sieve limit must be at least 1");
    if (limit > cap || limit >= std::numeric_limits<std::uint32_t>::max())
        throw cap_exceeded(limit, cap);

    std::vector<std::uint32_t> phi_v(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    phi_v[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (phi_v[i] == 0) {
            phi_v[i] = static_cast<std::uint32_t>(i - 1);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (const std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > limit) break;
            if (i % p == 0) {
                phi_v[ip] = phi_v[i] * p;
                break;
            }
            phi_v[ip] = phi_v[i] * (p - 1);
        }
    }
    return TotientTable(std::move(phi_v));
}

/// Sum of 1 <= k < n with gcd(n, k) = 1, via the closed form n*phi(n)/2.
/// The closed form needs n >= 2; coprime_sum(1) is the empty sum 0.
inline std::uint64_t coprime_sum_from_phi(std::uint64_t n, std::uint64_t phi_n) {
    if (n == 0) throw invalid_argument("coprime_sum is defined for n >= 1");
    if (n == 1) return 0;
    return checked_narrow<std::uint64_t>(wide_mul(n, phi_n) / 2);
}

inline std::uint64_t coprime_sum(std::uint64_t n) {
    return n == 1 ? 0 : coprime_sum_from_phi(n, phi(n));
}

inline std::uint64_t coprime_sum(std::uint64_t n, const TotientTable& table) {
    return coprime_sum_from_phi(n, table[n]);
}

/// Direct enumeration; the oracle for coprime_sum.
inline std::uint64_t coprime_sum_bruteforce(std::uint64_t n) {
    if (n == 0) throw invalid_argument("coprime_sum is defined for n >= 1");
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1; k < n; ++k)
        if (std::gcd(n, k) == 1) sum = checked_add(sum, k);
    return sum;
}

/// |F_1| .. |F_limit| from |F_1| = 2 and |F_n| = |F_{n-1}| + phi(n).
class LengthTable {
public:
    explicit LengthTable(const TotientTable& phis) : lengths_(phis.limit() + 1, 0) {
        lengths_[1] = 2;
        for (std::uint64_t n = 2; n <= phis.limit(); ++n)
            lengths_[n] = checked_add<std::uint64_t>(lengths_[n - 1], phis[n]);
    }

    std::uint64_t limit() const noexcept { return lengths_.size() - 1; }
    std::uint64_t operator[](std::uint64_t n) const { return lengths_.at(n); }

private:
    std::vector<std::uint64_t> lengths_;
};

/// |F_n| = 1 + sum of phi(1..n).
inline std::uint64_t farey_length(std::uint64_t n, std::uint64_t cap = default_sieve_cap) {
    const TotientTable table = phi_sieve(n, cap);
    std::uint64_t length = 1;
    for (const std::uint32_t v : table.values()) length = checked_add<std::uint64_t>(length, v);
    return length;
}

}  // namespace farey
