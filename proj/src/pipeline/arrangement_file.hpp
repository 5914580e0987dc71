#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycore/parser.hpp"
#include "singcurve/singcurve.hpp"

namespace logvec {

/// Polynomial text with the position of its first character in the file.
struct SourceExpr {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Line-oriented arrangement description:
///
///   # comment
///   vars x y z
///   curve x
///   curve y - z
///   add x^2 + y^2 - z^2
///   seed 7
///   option prime 32003
struct ArrangementFile {
  std::string source = "<input>";
  std::vector<std::string> vars{"x", "y", "z"};
  std::vector<SourceExpr> components;
  std::optional<SourceExpr> curve;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> prime;

  /// Parses the component equations. ParseError positions refer to the file.
  std::vector<Polynomial> component_polynomials() const;
  std::optional<Polynomial> curve_polynomial() const;
  Polynomial parse_expr(const SourceExpr& e) const;

  /// Canonical file text; parses back to an equivalent description.
  std::string render() const;
};

ArrangementFile parse_arrangement_file(std::string_view text, const std::string& source = "<input>");
ArrangementFile load_arrangement_file(const std::string& path);

}  // namespace logvec
