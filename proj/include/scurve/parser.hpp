#pragma once

#include "scurve/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace scurve {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_),
          col(col_) {}
};

// Text format for polynomial systems:
//   - variables x1, x2, ...; the variable count is the largest index used
//   - integer or rational (p/q) coefficients, imaginary unit i
//   - operators + - * ^ and parentheses; '*' is required between factors
//   - polynomials are separated by ';' or newlines; '#' starts a comment
PolynomialSystem parse_system(const std::string& text);

Polynomial parse_polynomial(const std::string& text);

PolynomialSystem load_system_file(const std::string& path);

}  // namespace scurve
