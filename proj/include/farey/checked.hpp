#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>

#include "farey/error.hpp"

namespace farey {

// Widened intermediates for cross products and accumulators.
using wide_uint = unsigned __int128;
using wide_int = __int128;

template <class T>
inline constexpr bool is_checked_integer_v =
    std::is_integral_v<T> || std::is_same_v<T, wide_uint> || std::is_same_v<T, wide_int>;

template <class T>
concept checked_integer = is_checked_integer_v<T> && !std::is_same_v<T, bool>;

template <checked_integer T>
constexpr T checked_add(T a, T b) {
    T r{};
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("addition overflow");
    return r;
}

template <checked_integer T>
constexpr T checked_sub(T a, T b) {
    T r{};
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("subtraction overflow");
    return r;
}

template <checked_integer T>
constexpr T checked_mul(T a, T b) {
    T r{};
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("multiplication overflow");
    return r;
}

/// Converts between integer widths, throwing instead of truncating.
template <checked_integer To, checked_integer From>
constexpr To checked_narrow(From v) {
    To r{};
    if (__builtin_add_overflow(v, From{0}, &r)) throw overflow_error("value does not fit target width");
    return r;
}

/// Exact 64x64 -> 128 bit product; cannot overflow.
constexpr wide_uint wide_mul(std::uint64_t a, std::uint64_t b) noexcept {
    return static_cast<wide_uint>(a) * b;
}

inline std::string to_string(wide_uint v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::string to_string(wide_int v) {
    if (v >= 0) return to_string(static_cast<wide_uint>(v));
    return "-" + to_string(static_cast<wide_uint>(0) - static_cast<wide_uint>(v));
}

}  // namespace farey
