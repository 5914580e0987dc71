#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycore/polynomial.hpp"

namespace logvec {

/// Raised on malformed polynomial text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t offset_, line_, column_;
};

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | variable | '(' expr ')'
/// Whitespace is ignored and '#' starts a comment running to end of line.
/// The result is fully expanded over Q.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Shorthand for the three-variable ring x, y, z.
Polynomial parse_polynomial(std::string_view text);

}  // namespace logvec
