#ifndef NBHD_ERROR_HPP
#define NBHD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbhd {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge list, group table).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A precondition on an argument was not met.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed (witness re-check, oracle mismatch).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace nbhd

#endif  // NBHD_ERROR_HPP
