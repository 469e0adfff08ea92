#pragma once

#include <stdexcept>
#include <string>

namespace fpalg {

enum class Errc {
    invalid_input,
    truncation,
    inconsistency,
    resource,
    parse,
};

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(Errc code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

class ParseError : public AlgebraError {
public:
    ParseError(const std::string& msg, int line, int col)
        : AlgebraError(Errc::parse,
                       msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace fpalg
