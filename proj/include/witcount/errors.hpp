#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace witcount {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed instance or hypergraph text. line() is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DuplicateVectorError : public ParseError {
public:
    using ParseError::ParseError;
};

// Dimension beyond the configured cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// An exact division that did not divide, or a count that went negative.
// Either one means a logic bug or corrupted input; nothing is ever rounded.
class ExactnessError : public Error {
public:
    using Error::Error;
};

// Caller broke a documented precondition (bad length, out-of-range index).
class ContractError : public Error {
public:
    using Error::Error;
};

// A brute-force oracle refused an instance that is too large to enumerate.
class GuardError : public Error {
public:
    using Error::Error;
};

}  // namespace witcount
