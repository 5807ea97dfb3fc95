#pragma once

#include <stdexcept>
#include <string>

namespace fano {

// Error taxonomy mirrored by the CLI exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid mathematical input: zero inversion, degenerate line, bad prime, ...
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed coefficient text or input file.  Exit code 3.
class ParseError : public Error {
public:
    using Error::Error;
};

// A structural guarantee failed at runtime.  Exit code 2.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// A configured search bound was exceeded.  Exit code 4.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace fano
