#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "farey/error.hpp"
#include "farey/fraction.hpp"
#include "farey/stream.hpp"
#include "farey/totient.hpp"

namespace farey {

inline constexpr std::uint64_t default_materialize_cap = 10'000'000;

/// F_n held in memory, ascending, endpoints included.
struct FareySequence {
    Order order{1};
    std::vector<Fraction> elements;

    std::size_t size() const noexcept { return elements.size(); }
    friend bool operator==(const FareySequence&, const FareySequence&) = default;
};

/// Collects ascending_stream(n). Refuses up front when |F_n| exceeds cap.
inline FareySequence materialize(Order n, std::uint64_t cap = default_materialize_cap) {
    const std::uint64_t predicted = farey_length(n.value());
    if (predicted > cap) throw cap_exceeded(predicted, cap);
    FareySequence seq{n, {}};
    seq.elements.reserve(predicted);
    for (const Fraction& f : ascending_stream(n)) seq.elements.push_back(f);
    return seq;
}

/// F_{n-1} -> F_n by inserting the mediant of every adjacent pair whose
/// denominators sum to n. Existing elements keep their relative order.
inline FareySequence refine(const FareySequence& seq, std::uint64_t cap = default_materialize_cap) {
    const std::uint64_t n = checked_add<std::uint64_t>(seq.order.value(), 1);
    const std::uint64_t predicted = checked_add<std::uint64_t>(seq.size(), phi(n));
    if (predicted > cap) throw cap_exceeded(predicted, cap);

    FareySequence out{Order(n), {}};
    out.elements.reserve(predicted);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0 && seq.elements[i - 1].den() + seq.elements[i].den() == n)
            out.elements.push_back(reduce(mediant(seq.elements[i - 1], seq.elements[i])));
        out.elements.push_back(seq.elements[i]);
    }
    return out;
}

/// {k/n : 1 <= k < n, gcd(k, n) = 1}, ascending. These are exactly the
/// members of F_n missing from F_{n-1}.
inline std::vector<Fraction> new_terms(Order n) {
    if (n.value() < 2) throw invalid_argument("new_terms requires n >= 2");
    std::vector<Fraction> out;
    for (std::uint64_t k = 1; k < n.value(); ++k)
        if (std::gcd(k, n.value()) == 1) out.push_back(Fraction::from_reduced(k, n.value()));
    return out;
}

/// Enumerate every reduced a/b with 0 <= a <= b <= n, then sort. Shares no
/// code with the streaming generator.
inline FareySequence bruteforce_sequence(Order n, std::uint64_t cap = default_materialize_cap) {
    const std::uint64_t predicted = farey_length(n.value());
    if (predicted > cap) throw cap_exceeded(predicted, cap);

    FareySequence seq{n, {}};
    for (std::uint64_t b = 1; b <= n.value(); ++b)
        for (std::uint64_t a = 0; a <= b; ++a)
            if (std::gcd(a, b) == 1) seq.elements.push_back(Fraction::from_reduced(a, b));
    std::sort(seq.elements.begin(), seq.elements.end());
    seq.elements.erase(std::unique(seq.elements.begin(), seq.elements.end()), seq.elements.end());
    return seq;
}

}  // namespace farey
