#ifndef PICKSPACE_PARSE_HPP
#define PICKSPACE_PARSE_HPP

#include <stdexcept>
#include <string>

#include "pickspace/polynomial.hpp"

namespace pickspace {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Parse an expression like "1 + 2 z1^2 z2 - (0.5+0.3i)(1-z1/2)^2" into a
/// polynomial on C^dim. Variables are z1..z<dim>; juxtaposition multiplies;
/// '/' divides by a numeric factor; '^' takes non-negative integer powers.
Polynomial parse_polynomial(const std::string& text, int dim);

}  // namespace pickspace

#endif
