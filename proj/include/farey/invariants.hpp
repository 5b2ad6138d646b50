#pragma once

/**
 * @file invariants.hpp
 * @brief Streaming checkers for the structural identities of F_n.
 *
 * Each single checker returns a passing CheckOutcome or throws
 * theorem_violation. verify_all runs a batch and folds every exception into
 * a failed report entry instead.
 */

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "farey/checked.hpp"
#include "farey/error.hpp"
#include "farey/fraction.hpp"
#include "farey/stream.hpp"
#include "farey/totient.hpp"

namespace farey {

enum class Check { sum, sum_recurrent, palindrome, reflection, neighbors, length };

inline constexpr Check all_checks[] = {Check::sum,       Check::sum_recurrent, Check::palindrome,
                                       Check::reflection, Check::neighbors,    Check::length};

constexpr std::string_view check_name(Check c) noexcept {
    switch (c) {
        case Check::sum: return "sum";
        case Check::sum_recurrent: return "sum-recurrent";
        case Check::palindrome: return "palindrome";
        case Check::reflection: return "reflection";
        case Check::neighbors: return "neighbors";
        case Check::length: return "length";
    }
    return "?";
}

inline std::optional<Check> parse_check(std::string_view name) noexcept {
    for (const Check c : all_checks)
        if (check_name(c) == name) return c;
    return std::nullopt;
}

/// Comma-separated check names. Throws invalid_argument on an unknown or
/// empty entry; duplicates are dropped.
inline std::vector<Check> parse_check_list(std::string_view list) {
    std::vector<Check> out;
    while (true) {
        const auto comma = list.find(',');
        const std::string_view item = list.substr(0, comma);
        const auto c = parse_check(item);
        if (!c) throw invalid_argument("unknown check '" + std::string(item) + "'");
        if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

/// Inclusive range of orders, lo <= hi.
struct OrderRange {
    Order lo{1};
    Order hi{1};

    OrderRange(Order l, Order h) : lo(l), hi(h) {
        if (hi < lo) throw invalid_argument("empty order range");
    }

    std::uint64_t size() const noexcept { return hi.value() - lo.value() + 1; }

    /// "lo..hi", both ends inclusive.
    static OrderRange parse(std::string_view text) {
        const auto dots = text.find("..");
        if (dots == std::string_view::npos) throw invalid_argument("range must look like LO..HI");
        const auto number = [&](std::string_view s) {
            std::uint64_t v = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
                throw invalid_argument("malformed range bound '" + std::string(s) + "'");
            return Order(v);
        };
        return OrderRange(number(text.substr(0, dots)), number(text.substr(dots + 2)));
    }
};

/// N_n and D_n measured over F_n.
template <class Acc>
struct BasicSumStats {
    Order order{1};
    Acc numerator_sum{};
    Acc denominator_sum{};

    friend bool operator==(const BasicSumStats&, const BasicSumStats&) = default;
};

using SumStats = BasicSumStats<wide_uint>;

struct CheckOutcome {
    Check check = Check::sum;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    Order order{1};
    std::vector<CheckOutcome> checks;

    bool overall() const noexcept {
        return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
    }
};

template <class Acc>
std::string describe(const BasicSumStats<Acc>& s) {
    return "N=" + to_string(static_cast<wide_uint>(s.numerator_sum)) +
           " D=" + to_string(static_cast<wide_uint>(s.denominator_sum));
}

namespace detail {

template <class Acc>
void require_double(const BasicSumStats<Acc>& s, std::string_view check, std::uint64_t position) {
    if (s.denominator_sum != checked_mul<Acc>(Acc{2}, s.numerator_sum))
        throw theorem_violation(std::string(check), position, describe(s) + ", expected D = 2N");
}

template <fraction_stream S>
Fraction pull(S& stream, std::string_view check, std::uint64_t position) {
    auto f = stream.next();
    if (!f) throw theorem_violation(std::string(check), position, "stream ended early");
    return *f;
}

}  // namespace detail

/// Streams F_n once, accumulating numerator and denominator sums in Acc.
template <class Acc = wide_uint, stream_source Src = StandardSource>
BasicSumStats<Acc> sum_check(Order n, const Src& src = {}) {
    BasicSumStats<Acc> s{n, Acc{0}, Acc{0}};
    auto stream = src.ascending(n);
    std::uint64_t count = 0;
    while (const auto f = stream.next()) {
        s.numerator_sum = checked_add<Acc>(s.numerator_sum, checked_narrow<Acc>(f->num()));
        s.denominator_sum = checked_add<Acc>(s.denominator_sum, checked_narrow<Acc>(f->den()));
        ++count;
    }
    detail::require_double(s, check_name(Check::sum), count);
    return s;
}

/// N_n and D_n for n = 1..limit without generating any sequence:
/// N_1 = 1, D_1 = 2, N_n = N_{n-1} + coprime_sum(n), D_n = D_{n-1} + n*phi(n).
template <class Acc = wide_uint>
std::vector<BasicSumStats<Acc>> sum_check_recurrent(Order limit, std::uint64_t sieve_cap = default_sieve_cap) {
    const TotientTable phis = phi_sieve(limit.value(), sieve_cap);
    std::vector<BasicSumStats<Acc>> out;
    out.reserve(limit.value());
    Acc num{1};
    Acc den{2};
    out.push_back({Order(1), num, den});
    for (std::uint64_t n = 2; n <= limit.value(); ++n) {
        num = checked_add<Acc>(num, checked_narrow<Acc>(coprime_sum(n, phis)));
        den = checked_add<Acc>(den, checked_narrow<Acc>(wide_mul(n, phis[n])));
        out.push_back({Order(n), num, den});
        detail::require_double(out.back(), check_name(Check::sum_recurrent), n);
    }
    return out;
}

/// The length of the denominator palindrome of F_n, i.e. |F_n|.
inline std::uint64_t palindrome_length(Order n, std::uint64_t sieve_cap = default_sieve_cap) {
    return farey_length(n.value(), sieve_cap);
}

namespace detail {

// Dual cursors over ceil(length / 2) positions. For odd length the middle
// element meets itself.
template <stream_source Src, class Compare>
std::uint64_t mirror_walk(Order n, std::uint64_t length, const Src& src, Check check, Compare&& agree) {
    auto up = src.ascending(n);
    auto down = src.descending(n);
    const std::uint64_t steps = (length + 1) / 2;
    for (std::uint64_t i = 0; i < steps; ++i) {
        const Fraction a = pull(up, check_name(check), i);
        const Fraction d = pull(down, check_name(check), i);
        if (!agree(a, d))
            throw theorem_violation(std::string(check_name(check)), i,
                                    to_string(a) + " vs mirrored " + to_string(d));
    }
    return steps;
}

template <stream_source Src>
CheckOutcome palindrome_check(Order n, std::uint64_t length, const Src& src) {
    const auto steps = mirror_walk(n, length, src, Check::palindrome,
                                   [](const Fraction& a, const Fraction& d) { return a.den() == d.den(); });
    return {Check::palindrome, true, std::to_string(length) + " denominators, " + std::to_string(steps) +
                                         " mirrored positions agree"};
}

template <stream_source Src>
CheckOutcome reflection_check(Order n, std::uint64_t length, const Src& src) {
    const auto steps = mirror_walk(n, length, src, Check::reflection,
                                   [](const Fraction& a, const Fraction& d) { return d == reflect(a); });
    return {Check::reflection, true, std::to_string(steps) + " mirrored positions are reflections"};
}

template <stream_source Src>
CheckOutcome length_check(Order n, std::uint64_t predicted, std::optional<std::uint64_t> previous,
                          const Src& src) {
    auto stream = src.ascending(n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    const std::string name(check_name(Check::length));
    if (count != predicted)
        throw theorem_violation(name, count,
                                "streamed " + std::to_string(count) + " elements, expected " + std::to_string(predicted));
    std::string detail = "|F_" + std::to_string(n.value()) + "|=" + std::to_string(count);
    if (previous) {
        const std::uint64_t phi_n = phi(n.value());
        if (count != *previous + phi_n)
            throw theorem_violation(name, count,
                                    std::to_string(count) + " != " + std::to_string(*previous) + " + phi(n)");
        detail += " = " + std::to_string(*previous) + " + " + std::to_string(phi_n);
    }
    return {Check::length, true, detail};
}

}  // namespace detail

/// Denominators of F_n read the same in both directions.
template <stream_source Src = StandardSource>
CheckOutcome palindrome_check(Order n, const Src& src = {}) {
    return detail::palindrome_check(n, farey_length(n.value()), src);
}

/// The i-th element from the end is the reflection of the i-th from the start.
template <stream_source Src = StandardSource>
CheckOutcome reflection_check(Order n, const Src& src = {}) {
    return detail::reflection_check(n, farey_length(n.value()), src);
}

/// Every consecutive pair has determinant 1, and the chain runs 0/1 .. 1/1.
template <stream_source Src = StandardSource>
CheckOutcome neighbor_chain_check(Order n, const Src& src = {}) {
    const std::string name(check_name(Check::neighbors));
    auto stream = src.ascending(n);
    const Fraction first = detail::pull(stream, name, 0);
    if (first != Fraction::zero()) throw theorem_violation(name, 0, "sequence starts at " + to_string(first));
    Fraction prev = first;
    std::uint64_t pairs = 0;
    while (const auto f = stream.next()) {
        if (compare(prev, *f) != std::strong_ordering::less || neighbor_det(prev, *f) != 1)
            throw theorem_violation(name, pairs, "pair (" + to_string(prev) + ", " + to_string(*f) +
                                                     ") is not unimodular");
        prev = *f;
        ++pairs;
    }
    if (prev != Fraction::one()) throw theorem_violation(name, pairs, "sequence ends at " + to_string(prev));
    return {Check::neighbors, true, std::to_string(pairs) + " consecutive pairs have det 1"};
}

/// Streamed |F_n| against 1 + sum phi(1..n), and the step from |F_{n-1}|.
template <stream_source Src = StandardSource>
CheckOutcome length_check(Order n, const Src& src = {}) {
    const TotientTable phis = phi_sieve(n.value());
    const LengthTable lengths(phis);
    std::optional<std::uint64_t> previous;
    if (n.value() >= 2) previous = lengths[n.value() - 1];
    return detail::length_check(n, lengths[n.value()], previous, src);
}

struct VerifyOptions {
    unsigned jobs = 0;  // 0: hardware concurrency
    std::uint64_t sieve_cap = default_sieve_cap;
};

/// Runs the selected checks for every order in the range. Orders are
/// distributed over worker threads; reports come back in ascending order.
template <stream_source Src = StandardSource>
std::vector<VerificationReport> verify_all(OrderRange range, std::span<const Check> checks,
                                           const VerifyOptions& options = {}, const Src& src = {}) {
    if (checks.empty()) throw invalid_argument("no checks selected");
    const auto wants = [&](Check c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };

    // Shared read-only state, built once for the whole range.
    const TotientTable phis = phi_sieve(range.hi.value(), options.sieve_cap);
    const LengthTable lengths(phis);
    std::vector<SumStats> recurrent;
    std::string recurrent_error;
    if (wants(Check::sum_recurrent)) {
        try {
            recurrent = sum_check_recurrent(range.hi, options.sieve_cap);
        } catch (const std::exception& e) {
            recurrent_error = e.what();
        }
    }

    const auto run_order = [&](Order n) {
        VerificationReport report{n, {}};
        std::optional<SumStats> streamed;
        for (const Check c : checks) {
            CheckOutcome outcome{c, false, {}};
            try {
                switch (c) {
                    case Check::sum:
                        streamed = sum_check(n, src);
                        outcome = {c, true, describe(*streamed)};
                        break;
                    case Check::sum_recurrent: {
                        if (!recurrent_error.empty()) throw error(recurrent_error);
                        const SumStats& r = recurrent[n.value() - 1];
                        outcome = {c, true, describe(r)};
                        if (!wants(Check::sum)) break;
                        if (!streamed) streamed = sum_check(n, src);
                        if (!(*streamed == r))
                            throw theorem_violation(std::string(check_name(c)), n.value(),
                                                    describe(r) + " disagrees with streamed " + describe(*streamed));
                        outcome.detail += ", agrees with streamed sums";
                        break;
                    }
                    case Check::palindrome:
                        outcome = detail::palindrome_check(n, lengths[n.value()], src);
                        break;
                    case Check::reflection:
                        outcome = detail::reflection_check(n, lengths[n.value()], src);
                        break;
                    case Check::neighbors:
                        outcome = neighbor_chain_check(n, src);
                        break;
                    case Check::length: {
                        std::optional<std::uint64_t> previous;
                        if (n.value() >= 2) previous = lengths[n.value() - 1];
                        outcome = detail::length_check(n, lengths[n.value()], previous, src);
                        break;
                    }
                }
            } catch (const std::exception& e) {
                outcome = {c, false, e.what()};
            }
            report.checks.push_back(std::move(outcome));
        }
        return report;
    };

    std::vector<VerificationReport> reports(range.size());
    std::atomic<std::uint64_t> next{0};
    const auto worker = [&] {
        for (std::uint64_t i = next++; i < reports.size(); i = next++)
            reports[i] = run_order(Order(range.lo.value() + i));
    };

    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, reports.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return reports;
}

}  // namespace farey
