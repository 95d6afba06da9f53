// Exception types shared across the library.  The C API maps them onto
// drc_status codes; the core throws and never returns error codes itself.
#pragma once

#include <stdexcept>
#include <string>

namespace drc {

// Config-text problem; carries the 1-based line number when known (0 = n/a).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A formula denominator came within the hard guard (1 kHz) of zero.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string &message) : std::runtime_error(message) {}
};

// File could not be opened, read, or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string &message) : std::runtime_error(message) {}
};

} // namespace drc
