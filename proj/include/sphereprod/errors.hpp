#pragma once

#include <stdexcept>
#include <string>

namespace sphereprod {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad dimensions, out-of-range indices, parse failures.
class InputError : public Error {
public:
    using Error::Error;
};

// A well-formed input that fails a group-membership precondition
// (not unimodular, not in the congruence subgroup, ...).
class MembershipError : public Error {
public:
    using Error::Error;
};

// An internally produced certificate failed re-verification.
class VerificationError : public Error {
public:
    using Error::Error;
};

// A size or length cap was exceeded.
class LimitError : public Error {
public:
    using Error::Error;
};

}  // namespace sphereprod
