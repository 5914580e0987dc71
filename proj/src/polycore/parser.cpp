#include "polycore/parser.hpp"

#include <cctype>

#include "polycore/format.hpp"

namespace logvec {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {
    if (vars.size() > kMaxVars) throw std::invalid_argument("too many variables");
  }

  Polynomial run() {
    skip();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

private:
  Polynomial expr() {
    skip();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::size_t start = pos_;
      unsigned long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > kMaxExponent) fail("exponent too large", start);
        ++pos_;
      }
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    skip();
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Polynomial inner = expr();
      skip();
      if (peek() != ')') fail("unbalanced parenthesis", at_end() ? open : pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial number() {
    std::string num = digits();
    std::string den = "1";
    std::size_t save = pos_;
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      std::size_t at = pos_;
      den = digits();
      if (Integer(den) == 0) fail("zero denominator", at);
    } else {
      pos_ = save;
    }
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return Polynomial::constant(vars_.size(), q);
  }

  Polynomial variable() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
    fail("unknown variable '" + std::string(name) + "'", start);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end()) {
      char c = text_[pos_];
      if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, at, line, col);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

Polynomial parse_polynomial(std::string_view text) {
  static const std::vector<std::string> xyz{"x", "y", "z"};
  return parse_polynomial(text, xyz);
}

}  // namespace logvec
