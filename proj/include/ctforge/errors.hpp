#pragma once

#include <stdexcept>
#include <string>

namespace ctforge {

/// Input rejected by a precondition (bad rank, wrong family, empty set...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation left the range in which it is known to be exact.
class WindowExceeded : public std::out_of_range {
public:
    explicit WindowExceeded(const std::string& what) : std::out_of_range(what) {}
};

/// A mathematical check that must hold did not (a nonzero Hom where vanishing
/// was required, two routes disagreeing, ...).
class VerificationFailure : public std::runtime_error {
public:
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace ctforge
