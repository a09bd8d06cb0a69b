#pragma once

#include <stdexcept>
#include <string>

namespace djm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two curves share a segment, or one passes through the other's endpoint.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

// Malformed drawing structure or unreadable input file.
class InputError : public Error {
public:
    using Error::Error;
};

// A proved existence guarantee failed (fewer than two face-contained candidates).
class GuaranteeViolation : public Error {
public:
    using Error::Error;
};

// An edge between two neighbours of u broke the one-side crossing dichotomy.
class ClaimViolation : public Error {
public:
    using Error::Error;
};

// A transformed drawing does not cross exactly where its source does.
class EquivalenceViolation : public Error {
public:
    using Error::Error;
};

// A returned matching failed re-verification against the original drawing.
class CertificationFailure : public Error {
public:
    using Error::Error;
};

class GenerationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace djm
