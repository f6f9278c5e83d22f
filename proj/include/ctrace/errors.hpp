#pragma once

#include <stdexcept>
#include <string>

namespace ctrace {

// Error taxonomy mirrors the CLI exit codes: parse errors (2), validation
// errors (3), unsupported cases (4).

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text: bad JSON, bad rational literal, bad builtin expression.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Well-formed input that violates a semantic contract: unknown vertex,
/// shape mismatch, n < 1, basepoint split on a disconnected space.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Input outside the cases this tool supports (nonzero Dixmier-Douady class
/// over anything but a rational S^3).
class UnsupportedCaseError : public Error {
public:
    explicit UnsupportedCaseError(const std::string& msg) : Error(msg) {}
};

} // namespace ctrace
