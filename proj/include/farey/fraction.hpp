#pragma once

/**
 * @file fraction.hpp
 * @brief Reduced fractions in [0,1] and the primitive Farey operations.
 *
 * Numerators and denominators are 64-bit unsigned. Every cross product is
 * formed in 128 bits, so comparisons are exact and never touch floating
 * point. Sums that leave 64 bits raise overflow_error instead of wrapping.
 */

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include "farey/checked.hpp"
#include "farey/error.hpp"

namespace farey {

/// Index n of F_n. Always at least 1.
class Order {
public:
    constexpr explicit Order(std::uint64_t n) : n_(n) {
        if (n == 0) throw invalid_argument("order must be at least 1");
    }

    constexpr std::uint64_t value() const noexcept { return n_; }

    friend constexpr auto operator<=>(Order, Order) = default;

private:
    std::uint64_t n_;
};

/// Unreduced numerator/denominator pair, as produced by a formal mediant.
struct RawPair {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend constexpr bool operator==(const RawPair&, const RawPair&) = default;
};

/// A rational a/b with gcd(a,b) = 1 and 0 <= a <= b.
class Fraction {
public:
    constexpr Fraction() = default;

    /// Accepts only input already in reduced form; see make_fraction for the
    /// reducing path.
    static constexpr Fraction from_reduced(std::uint64_t num, std::uint64_t den) {
        validate_range(num, den);
        if (std::gcd(num, den) != 1)
            throw invalid_argument(std::to_string(num) + "/" + std::to_string(den) +
                                   " is not in lowest terms");
        return Fraction(num, den);
    }

    static constexpr Fraction zero() noexcept { return Fraction(0, 1); }
    static constexpr Fraction one() noexcept { return Fraction(1, 1); }

    constexpr std::uint64_t num() const noexcept { return num_; }
    constexpr std::uint64_t den() const noexcept { return den_; }

    friend constexpr bool operator==(const Fraction&, const Fraction&) = default;

    friend constexpr std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) noexcept {
        return wide_mul(x.num_, y.den_) <=> wide_mul(y.num_, x.den_);
    }

private:
    constexpr Fraction(std::uint64_t num, std::uint64_t den) noexcept : num_(num), den_(den) {}

    static constexpr void validate_range(std::uint64_t num, std::uint64_t den) {
        if (den == 0) throw zero_denominator();
        if (num > den) throw out_of_unit_interval(num, den);
    }

    friend constexpr Fraction make_fraction(std::uint64_t num, std::uint64_t den);

    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// Reduces num/den to lowest terms. 0/b canonicalizes to 0/1.
constexpr Fraction make_fraction(std::uint64_t num, std::uint64_t den) {
    Fraction::validate_range(num, den);
    const std::uint64_t g = std::gcd(num, den);
    return Fraction(num / g, den / g);
}

constexpr Fraction reduce(const RawPair& p) { return make_fraction(p.num, p.den); }

/// Exact order of the two values. 64x64-bit cross products always fit the
/// 128-bit intermediate, so this cannot overflow.
constexpr std::strong_ordering compare(const Fraction& x, const Fraction& y) noexcept {
    return x <=> y;
}

/// Compares the value of an unreduced pair against a fraction.
constexpr std::strong_ordering compare(const RawPair& x, const Fraction& y) noexcept {
    return wide_mul(x.num, y.den()) <=> wide_mul(y.num(), x.den);
}

constexpr std::strong_ordering compare(const Fraction& x, const RawPair& y) noexcept {
    return wide_mul(x.num(), y.den) <=> wide_mul(y.num, x.den());
}

/// Formal sum (a+c, b+d), left unreduced.
constexpr RawPair mediant(const Fraction& x, const Fraction& y) {
    return RawPair{checked_add(x.num(), y.num()), checked_add(x.den(), y.den())};
}

/// bc - ad for x = a/b < y = c/d. Equals 1 exactly when x and y are adjacent
/// in some Farey sequence containing both.
constexpr wide_int neighbor_det(const Fraction& x, const Fraction& y) {
    const wide_uint bc = wide_mul(x.den(), y.num());
    const wide_uint ad = wide_mul(x.num(), y.den());
    if (bc <= ad) throw not_ascending("neighbor_det requires x < y");
    return checked_narrow<wide_int>(bc - ad);
}

/// a/b -> (b-a)/b. Already reduced since gcd(b-a, b) = gcd(a, b).
constexpr Fraction reflect(const Fraction& x) {
    return Fraction::from_reduced(x.den() - x.num(), x.den());
}

// ---------------------------------------------------------------------------
// Text form "a/b": ASCII decimal digits, one slash, nothing else.

inline std::optional<RawPair> parse_pair(std::string_view text) noexcept {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) return std::nullopt;
    const auto digits = [](std::string_view s) {
        return s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    const std::string_view lhs = text.substr(0, slash);
    const std::string_view rhs = text.substr(slash + 1);
    if (!digits(lhs) || !digits(rhs)) return std::nullopt;

    RawPair p;
    auto [e1, ec1] = std::from_chars(lhs.data(), lhs.data() + lhs.size(), p.num);
    auto [e2, ec2] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), p.den);
    if (ec1 != std::errc{} || ec2 != std::errc{}) return std::nullopt;
    if (e1 != lhs.data() + lhs.size() || e2 != rhs.data() + rhs.size()) return std::nullopt;
    return p;
}

/// Parses and reduces. Throws invalid_argument on malformed text.
inline Fraction parse_fraction(std::string_view text) {
    const auto p = parse_pair(text);
    if (!p) throw invalid_argument("malformed fraction '" + std::string(text) + "'");
    return make_fraction(p->num, p->den);
}

/// Parses and requires the text to already be in lowest terms.
inline Fraction parse_reduced_fraction(std::string_view text) {
    const auto p = parse_pair(text);
    if (!p) throw invalid_argument("malformed fraction '" + std::string(text) + "'");
    return Fraction::from_reduced(p->num, p->den);
}

inline std::string to_string(const Fraction& x) {
    return std::to_string(x.num()) + "/" + std::to_string(x.den());
}

inline std::string to_string(const RawPair& p) {
    return std::to_string(p.num) + "/" + std::to_string(p.den);
}

inline std::ostream& operator<<(std::ostream& os, const Fraction& x) {
    return os << x.num() << '/' << x.den();
}

inline std::ostream& operator<<(std::ostream& os, const RawPair& p) { return os << p.num << '/' << p.den; }

}  // namespace farey
