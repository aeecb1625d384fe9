#pragma once

#include <stdexcept>
#include <string>

namespace gracelab {

// Malformed input: bad graph structure, out-of-domain construction
// parameters, rejected custom base, unusable search request.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable document or graph6 text.  Carries a line number when known
// (0 = not applicable).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace gracelab
