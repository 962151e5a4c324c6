#pragma once

#include <stdexcept>
#include <string>

namespace ectarget {

// Raised when an input violates a precondition (malformed file, invalid
// graph, bad coloring, out-of-range parameter).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Raised when an exhaustive search would exceed its configured size guard.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace ectarget
