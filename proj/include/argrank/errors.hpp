#pragma once

#include <stdexcept>
#include <string>

namespace argrank {

// Input text could not be parsed. line/col are 1-based; col 0 means
// "whole line".
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int col)
        : std::runtime_error("line " + std::to_string(line) +
                             (col > 0 ? ":" + std::to_string(col) : "") + ": " + msg),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Instance exceeds a size limit (kMaxArgs, exhaustive-enumeration bound, ...).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace argrank
