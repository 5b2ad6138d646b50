#pragma once

/**
 * @file stream.hpp
 * @brief Constant-memory generation of F_n in either direction.
 *
 * A stream keeps only the last two emitted fractions. Given an adjacent pair
 * a/b, c/d of F_n, the following element is
 *
 *     (k*c - a) / (k*d - b),   k = floor((n + b) / d),
 *
 * which is the unique fraction e/f with cf - de = 1 and f <= n maximal. The
 * same formula walks the sequence backwards when the pair is descending.
 */

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>

#include "farey/checked.hpp"
#include "farey/error.hpp"
#include "farey/fraction.hpp"

namespace farey {

enum class Direction { ascending, descending };

namespace detail {

// Successor of (prev, curr) at order n. Valid for both directions.
constexpr Fraction step(std::uint64_t n, const Fraction& prev, const Fraction& curr) {
    const std::uint64_t k = checked_add(n, prev.den()) / curr.den();
    const std::uint64_t num = checked_sub(checked_mul(k, curr.num()), prev.num());
    const std::uint64_t den = checked_sub(checked_mul(k, curr.den()), prev.den());
    return Fraction::from_reduced(num, den);
}

}  // namespace detail

/// The element of F_n immediately after curr, where prev < curr are adjacent.
constexpr Fraction next_term(Order n, const Fraction& prev, const Fraction& curr) {
    if (curr == Fraction::one()) throw end_of_sequence();
    if (curr.den() > n.value() || prev.den() > n.value())
        throw invalid_argument("fraction denominator exceeds order");
    if (neighbor_det(prev, curr) != 1) throw invalid_argument("prev and curr are not Farey neighbours");
    if (checked_add(prev.den(), curr.den()) <= n.value())
        throw invalid_argument("prev and curr are not adjacent at this order");
    return detail::step(n.value(), prev, curr);
}

/// Single-owner cursor over F_n. next() yields each element once, then
/// std::nullopt.
class FareyStream {
public:
    FareyStream(Order n, Direction dir)
        : order_(n),
          dir_(dir),
          prev_(dir == Direction::ascending ? Fraction::zero() : Fraction::one()),
          curr_(dir == Direction::ascending ? Fraction::from_reduced(1, n.value())
                                            : Fraction::from_reduced(n.value() - 1, n.value())) {}

    Order order() const noexcept { return order_; }
    Direction direction() const noexcept { return dir_; }
    bool exhausted() const noexcept { return exhausted_; }

    /// Number of elements produced so far.
    std::uint64_t position() const noexcept { return emitted_; }

    std::optional<Fraction> next() {
        if (exhausted_) return std::nullopt;
        if (emitted_ == 0) {
            emitted_ = 1;
            return prev_;
        }
        if (emitted_ > 1) {
            const Fraction following = detail::step(order_.value(), prev_, curr_);
            prev_ = curr_;
            curr_ = following;
        }
        ++emitted_;
        exhausted_ = is_terminal(curr_);
        return curr_;
    }

    // Range-for support.
    struct sentinel {};

    class iterator {
    public:
        using value_type = Fraction;
        using difference_type = std::ptrdiff_t;
        using iterator_concept = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(FareyStream* s) : stream_(s), value_(s->next()) {}

        const Fraction& operator*() const { return *value_; }
        iterator& operator++() {
            value_ = stream_->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, sentinel) { return !it.value_.has_value(); }

    private:
        FareyStream* stream_ = nullptr;
        std::optional<Fraction> value_;
    };

    iterator begin() { return iterator(this); }
    sentinel end() const noexcept { return {}; }

private:
    bool is_terminal(const Fraction& f) const noexcept {
        return dir_ == Direction::ascending ? f == Fraction::one() : f == Fraction::zero();
    }

    Order order_;
    Direction dir_;
    Fraction prev_;
    Fraction curr_;
    std::uint64_t emitted_ = 0;
    bool exhausted_ = false;
};

inline FareyStream ascending_stream(Order n) { return FareyStream(n, Direction::ascending); }
inline FareyStream descending_stream(Order n) { return FareyStream(n, Direction::descending); }

/// Anything with next() -> optional<Fraction>.
template <class S>
concept fraction_stream = requires(S s) {
    { s.next() } -> std::same_as<std::optional<Fraction>>;
};

/// Provider of ascending and descending streams for a given order. Checkers
/// take one of these so a test double can inject faults.
template <class Src>
concept stream_source = requires(const Src& src, Order n) {
    { src.ascending(n) } -> fraction_stream;
    { src.descending(n) } -> fraction_stream;
};

struct StandardSource {
    FareyStream ascending(Order n) const { return ascending_stream(n); }
    FareyStream descending(Order n) const { return descending_stream(n); }
};

/// Left and right neighbours of x in F_n; nullopt at the endpoints.
struct Neighbors {
    std::optional<Fraction> left;
    std::optional<Fraction> right;
};

namespace detail {

// Inverse of a modulo m (gcd(a, m) = 1, m >= 2), in [1, m).
constexpr std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    wide_int r0 = m, r1 = a % m;
    wide_int t0 = 0, t1 = 1;
    while (r1 != 0) {
        const wide_int q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (t0 < 0) t0 += m;
    return static_cast<std::uint64_t>(t0);
}

// Largest d <= n with d congruent to residue (mod m), residue in [1, m].
constexpr std::uint64_t lift(std::uint64_t residue, std::uint64_t m, std::uint64_t n) {
    return residue + m * ((n - residue) / m);
}

}  // namespace detail

/// Solves the unimodular condition directly: the right neighbour c/d of a/b
/// satisfies bc - ad = 1 with d <= n maximal, the left one e/f satisfies
/// af - be = 1 with f <= n maximal.
constexpr Neighbors neighbors_of(const Fraction& x, Order order) {
    const std::uint64_t n = order.value();
    const std::uint64_t a = x.num();
    const std::uint64_t b = x.den();
    if (b > n) throw invalid_argument(to_string(x) + " is not a member of F_" + std::to_string(n));

    Neighbors out;
    if (b == 1) {
        if (a == 0) out.right = Fraction::from_reduced(1, n);
        else out.left = Fraction::from_reduced(n - 1, n);
        return out;
    }
    // a*d = -1 (mod b)
    const std::uint64_t inv = detail::mod_inverse(a, b);
    const std::uint64_t d = detail::lift(b - inv, b, n);
    const std::uint64_t c = static_cast<std::uint64_t>((wide_mul(a, d) + 1) / b);
    out.right = Fraction::from_reduced(c, d);
    // a*f = 1 (mod b)
    const std::uint64_t f = detail::lift(inv, b, n);
    const std::uint64_t e = static_cast<std::uint64_t>((wide_mul(a, f) - 1) / b);
    out.left = Fraction::from_reduced(e, f);
    return out;
}

}  // namespace farey
