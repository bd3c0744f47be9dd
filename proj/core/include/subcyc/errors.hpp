#ifndef SUBCYC_ERRORS_HPP
#define SUBCYC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subcyc {

// Base class for all subcyc errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (ideal grammar, subspace file, field string).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Semantically invalid input: unit/zero ideal, empty sign vector support,
// inconsistent affine system, caps exceeded.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// An exact cross-route identity failed. Either the two computational
// engines disagree (a bug) or the caller asked to verify something false.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Preconditions violated by internal callers (non-complex differentials,
// chain map that does not descend to homology).
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace subcyc

#endif
