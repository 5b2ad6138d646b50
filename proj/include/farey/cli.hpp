#pragma once

/**
 * @file cli.hpp
 * @brief The `farey` command line, callable in-process.
 *
 * Exit codes: 0 success, 1 a verification failed, 2 usage error,
 * 3 resource cap or arithmetic overflow.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <new>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "farey/error.hpp"
#include "farey/fraction.hpp"
#include "farey/invariants.hpp"
#include "farey/stream.hpp"
#include "farey/totient.hpp"

namespace farey::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, resource_error = 3 };

enum class Format { text, csv, json };

inline constexpr std::uint64_t default_cap = 10'000'000;

struct Environment {
    std::optional<std::string> farey_cap;  // value of FAREY_CAP, if set

    static Environment from_process() {
        Environment env;
        if (const char* v = std::getenv("FAREY_CAP")) env.farey_cap = v;
        return env;
    }
};

namespace detail {

using json = nlohmann::ordered_json;

inline Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    return Format::text;
}

inline std::uint64_t parse_positive(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || v == 0)
        throw invalid_argument(std::string(what) + " must be a positive integer, got '" + s + "'");
    return v;
}

// Values wider than 64 bits are emitted as decimal strings.
inline json wide_json(wide_uint v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return to_string(v);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

// Emits an array of records one element at a time.
class JsonArrayWriter {
public:
    explicit JsonArrayWriter(std::ostream& out) : out_(out) { out_ << '['; }
    ~JsonArrayWriter() { out_ << "]\n"; }
    JsonArrayWriter(const JsonArrayWriter&) = delete;
    JsonArrayWriter& operator=(const JsonArrayWriter&) = delete;

    void write(const json& record) {
        if (!first_) out_ << ',';
        first_ = false;
        out_ << record.dump();
    }

private:
    std::ostream& out_;
    bool first_ = true;
};

struct Settings {
    std::string format = "text";
    std::optional<std::uint64_t> cap_flag;
};

inline void gen(std::ostream& out, Format format, Order order, bool desc, std::optional<std::uint64_t> limit) {
    FareyStream stream = desc ? descending_stream(order) : ascending_stream(order);
    const std::uint64_t max_count = limit.value_or(std::numeric_limits<std::uint64_t>::max());
    std::uint64_t index = 0;
    switch (format) {
        case Format::text:
            for (auto f = stream.next(); f && index < max_count; f = stream.next(), ++index)
                out << (index == 0 ? "" : " ") << *f;
            out << '\n';
            break;
        case Format::csv:
            out << "index,numerator,denominator\n";
            for (auto f = stream.next(); f && index < max_count; f = stream.next(), ++index)
                out << index << ',' << f->num() << ',' << f->den() << '\n';
            break;
        case Format::json: {
            JsonArrayWriter w(out);
            for (auto f = stream.next(); f && index < max_count; f = stream.next(), ++index)
                w.write({{"index", index}, {"numerator", f->num()}, {"denominator", f->den()}});
            break;
        }
    }
}

template <stream_source Src>
void stats(std::ostream& out, Format format, Order order, std::uint64_t cap, const Src& src) {
    const std::uint64_t length = farey_length(order.value(), cap);
    const std::uint64_t phi_n = phi(order.value());
    const SumStats s = sum_check(order, src);
    switch (format) {
        case Format::text: {
            // N >= 1 always, and D = 2N has been asserted by sum_check.
            out << "order=" << order.value() << " length=" << length << " phi=" << phi_n
                << " numerator_sum=" << to_string(s.numerator_sum)
                << " denominator_sum=" << to_string(s.denominator_sum)
                << " ratio=" << to_string(s.denominator_sum / s.numerator_sum) << '\n';
            break;
        }
        case Format::csv:
            out << "order,length,phi,numerator_sum,denominator_sum\n"
                << order.value() << ',' << length << ',' << phi_n << ',' << to_string(s.numerator_sum) << ','
                << to_string(s.denominator_sum) << '\n';
            break;
        case Format::json: {
            JsonArrayWriter w(out);
            w.write({{"order", order.value()},
                     {"length", length},
                     {"phi", phi_n},
                     {"numerator_sum", wide_json(s.numerator_sum)},
                     {"denominator_sum", wide_json(s.denominator_sum)}});
            break;
        }
    }
}

inline void print_reports(std::ostream& out, Format format, const std::vector<VerificationReport>& reports) {
    switch (format) {
        case Format::text:
            for (const auto& r : reports) {
                out << "order " << r.order.value() << ": " << (r.overall() ? "PASS" : "FAIL") << '\n';
                for (const auto& c : r.checks)
                    out << "  " << check_name(c.check) << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.detail
                        << ")\n";
            }
            break;
        case Format::csv:
            out << "order,check,pass,detail\n";
            for (const auto& r : reports)
                for (const auto& c : r.checks)
                    out << r.order.value() << ',' << check_name(c.check) << ',' << (c.pass ? "true" : "false") << ','
                        << csv_field(c.detail) << '\n';
            break;
        case Format::json: {
            JsonArrayWriter w(out);
            for (const auto& r : reports)
                for (const auto& c : r.checks)
                    w.write({{"order", r.order.value()},
                             {"check", std::string(check_name(c.check))},
                             {"pass", c.pass},
                             {"detail", c.detail}});
            break;
        }
    }
}

inline void neighbors(std::ostream& out, Format format, const Fraction& x, Order order) {
    const Neighbors nb = neighbors_of(x, order);
    const auto text = [](const std::optional<Fraction>& f) { return f ? to_string(*f) : std::string("NONE"); };
    const auto det_text = [](std::optional<wide_int> d) { return d ? to_string(*d) : std::string("NONE"); };
    std::optional<wide_int> left_det, right_det;
    if (nb.left) left_det = neighbor_det(*nb.left, x);
    if (nb.right) right_det = neighbor_det(x, *nb.right);
    switch (format) {
        case Format::text:
            out << "left " << text(nb.left) << " det " << det_text(left_det) << '\n'
                << "right " << text(nb.right) << " det " << det_text(right_det) << '\n';
            break;
        case Format::csv:
            out << "fraction,order,left,left_det,right,right_det\n"
                << x << ',' << order.value() << ',' << text(nb.left) << ',' << det_text(left_det) << ','
                << text(nb.right) << ',' << det_text(right_det) << '\n';
            break;
        case Format::json: {
            const auto frac_json = [&](const std::optional<Fraction>& f) { return f ? json(to_string(*f)) : json(); };
            const auto det_json = [](std::optional<wide_int> d) {
                return d ? json(static_cast<std::int64_t>(*d)) : json();
            };
            JsonArrayWriter w(out);
            w.write({{"fraction", to_string(x)},
                     {"order", order.value()},
                     {"left", frac_json(nb.left)},
                     {"left_det", det_json(left_det)},
                     {"right", frac_json(nb.right)},
                     {"right_det", det_json(right_det)}});
            break;
        }
    }
}

inline void mediant_cmd(std::ostream& out, Format format, const Fraction& x, const Fraction& y) {
    const RawPair raw = mediant(x, y);
    const Fraction reduced = reduce(raw);
    switch (format) {
        case Format::text:
            out << "raw " << raw << '\n' << "reduced " << reduced << '\n';
            break;
        case Format::csv:
            out << "raw,reduced\n" << raw << ',' << reduced << '\n';
            break;
        case Format::json: {
            JsonArrayWriter w(out);
            w.write({{"raw", to_string(raw)}, {"reduced", to_string(reduced)}});
            break;
        }
    }
}

inline void totient(std::ostream& out, Format format, std::uint64_t n, bool upto, std::uint64_t cap) {
    std::vector<std::array<std::uint64_t, 3>> rows;
    if (upto) {
        const TotientTable table = phi_sieve(n, cap);
        rows.reserve(n);
        for (std::uint64_t k = 1; k <= n; ++k) rows.push_back({k, table[k], coprime_sum(k, table)});
    } else {
        const std::uint64_t p = phi(n);
        rows.push_back({n, p, coprime_sum_from_phi(n, p)});
    }
    switch (format) {
        case Format::text:
            for (const auto& [k, p, s] : rows) {
                if (upto) out << "n=" << k << ' ';
                out << "phi=" << p << " coprime_sum=" << s << '\n';
            }
            break;
        case Format::csv:
            out << "n,phi,coprime_sum\n";
            for (const auto& [k, p, s] : rows) out << k << ',' << p << ',' << s << '\n';
            break;
        case Format::json: {
            JsonArrayWriter w(out);
            for (const auto& [k, p, s] : rows) w.write({{"n", k}, {"phi", p}, {"coprime_sum", s}});
            break;
        }
    }
}

}  // namespace detail

/// Entry point. `args` excludes the program name.
template <stream_source Src = StandardSource>
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, const Environment& env = {},
        const Src& src = {}) {
    CLI::App app{"Farey sequence generation and verification", "farey"};
    app.require_subcommand(1);

    detail::Settings settings;
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    };
    const auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", settings.cap_flag, "Upper bound on table or sequence size");
    };

    std::uint64_t order_value = 0;
    std::optional<std::uint64_t> limit;
    bool desc = false;
    auto* gen = app.add_subcommand("gen", "Print the members of F_n");
    gen->add_option("--order", order_value, "Order n")->required();
    gen->add_flag("--desc", desc, "Descending order");
    gen->add_option("--limit", limit, "Print at most K elements");
    add_format(gen);
    add_cap(gen);

    auto* stats = app.add_subcommand("stats", "Length, phi(n), numerator and denominator sums of F_n");
    stats->add_option("--order", order_value, "Order n")->required();
    add_format(stats);
    add_cap(stats);

    std::string orders_text;
    std::string checks_text;
    std::optional<unsigned> jobs;
    auto* verify = app.add_subcommand("verify", "Check the structural identities over a range of orders");
    verify->add_option("--orders", orders_text, "Inclusive range LO..HI")->required();
    verify->add_option("--checks", checks_text, "Comma-separated: sum,sum-recurrent,palindrome,reflection,neighbors,length");
    verify->add_option("--jobs", jobs, "Worker threads");
    add_format(verify);
    add_cap(verify);

    std::string frac_text;
    auto* nbrs = app.add_subcommand("neighbors", "Left and right neighbours of a fraction in F_n");
    nbrs->add_option("--frac", frac_text, "Reduced fraction a/b")->required();
    nbrs->add_option("--order", order_value, "Order n")->required();
    add_format(nbrs);

    std::string x_text, y_text;
    auto* med = app.add_subcommand("mediant", "Mediant of two fractions");
    med->add_option("x", x_text)->required();
    med->add_option("y", y_text)->required();
    add_format(med);

    std::uint64_t totient_n = 0;
    bool upto = false;
    auto* tot = app.add_subcommand("totient", "phi(n) and the sum of residues coprime to n");
    tot->add_option("n", totient_n)->required();
    tot->add_flag("--upto", upto, "Print the table for 1..n");
    add_format(tot);
    add_cap(tot);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        const Format format = detail::parse_format(settings.format);
        std::uint64_t cap = default_cap;
        if (settings.cap_flag) {
            if (*settings.cap_flag == 0) throw invalid_argument("--cap must be a positive integer");
            cap = *settings.cap_flag;
        } else if (env.farey_cap) {
            cap = detail::parse_positive(*env.farey_cap, "FAREY_CAP");
        }

        if (gen->parsed()) {
            if (limit && *limit == 0) throw invalid_argument("--limit must be a positive integer");
            detail::gen(out, format, Order(order_value), desc, limit);
        } else if (stats->parsed()) {
            detail::stats(out, format, Order(order_value), cap, src);
        } else if (verify->parsed()) {
            const OrderRange range = OrderRange::parse(orders_text);
            const std::vector<Check> checks = checks_text.empty()
                                                  ? std::vector<Check>(std::begin(all_checks), std::end(all_checks))
                                                  : parse_check_list(checks_text);
            if (jobs && *jobs == 0) throw invalid_argument("--jobs must be a positive integer");
            const auto reports = verify_all(range, checks, VerifyOptions{jobs.value_or(0), cap}, src);
            detail::print_reports(out, format, reports);
            const bool all_pass =
                std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.overall(); });
            return all_pass ? ok : verification_failed;
        } else if (nbrs->parsed()) {
            detail::neighbors(out, format, parse_reduced_fraction(frac_text), Order(order_value));
        } else if (med->parsed()) {
            detail::mediant_cmd(out, format, parse_fraction(x_text), parse_fraction(y_text));
        } else if (tot->parsed()) {
            if (totient_n == 0) throw invalid_argument("n must be a positive integer");
            detail::totient(out, format, totient_n, upto, cap);
        }
        return ok;
    } catch (const invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const theorem_violation& e) {
        err << "verification failed: " << e.what() << '\n';
        return verification_failed;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return resource_error;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return resource_error;
    }
}

}  // namespace farey::cli
