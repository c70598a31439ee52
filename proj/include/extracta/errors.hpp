#ifndef EXTRACTA_ERRORS_HPP
#define EXTRACTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extracta {

/// Mathematically well-posed refusal (non-control order where a control
/// order is required, missing decomposition, rank-deficient order matrix).
/// The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text rejected with position info. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int col)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace extracta

#endif
