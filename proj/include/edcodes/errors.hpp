#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edcodes {

// Caller passed a value outside an operation's domain (wrong alphabet,
// non-code input, budget < 1, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search or expansion would exceed a configured resource bound.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const std::string& what, std::size_t bound)
        : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}

    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

// A construction failed its own postcondition check. Always a bug.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace edcodes
