#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace farey {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violations and malformed input (bad order, empty range,
/// unparsable text, unreduced fraction where a reduced one is required).
class invalid_argument : public error {
public:
    using error::error;
};

class zero_denominator : public invalid_argument {
public:
    zero_denominator() : invalid_argument("zero denominator") {}
};

class out_of_unit_interval : public invalid_argument {
public:
    out_of_unit_interval(std::uint64_t num, std::uint64_t den)
        : invalid_argument(std::to_string(num) + "/" + std::to_string(den) +
                           " lies outside [0,1]") {}
};

class not_ascending : public invalid_argument {
public:
    using invalid_argument::invalid_argument;
};

/// An exact intermediate left the range of its integer type.
class overflow_error : public error {
public:
    using error::error;
};

/// Advancing past the last element of a sequence.
class end_of_sequence : public error {
public:
    end_of_sequence() : error("end of sequence") {}
};

/// A table or materialized sequence would exceed the configured cap.
class cap_exceeded : public error {
public:
    cap_exceeded(std::uint64_t predicted, std::uint64_t cap)
        : error("predicted size " + std::to_string(predicted) + " exceeds cap " +
                std::to_string(cap)),
          predicted_(predicted),
          cap_(cap) {}

    std::uint64_t predicted() const noexcept { return predicted_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t predicted_;
    std::uint64_t cap_;
};

/// A proved identity failed to hold. Always an implementation (or injected)
/// fault; carries the check name and the stream position where it surfaced.
class theorem_violation : public error {
public:
    theorem_violation(std::string check, std::uint64_t position, const std::string& what)
        : error(check + " violated at position " + std::to_string(position) + ": " + what),
          check_(std::move(check)),
          position_(position) {}

    const std::string& check() const noexcept { return check_; }
    std::uint64_t position() const noexcept { return position_; }

private:
    std::string check_;
    std::uint64_t position_;
};

}  // namespace farey
