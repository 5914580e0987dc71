#include "pipeline/arrangement_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "polycore/format.hpp"

namespace logvec {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Cursor {
  std::string_view line;
  std::size_t lineno;
  std::size_t pos = 0;

  void skip() {
    while (pos < line.size() && is_space(line[pos])) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= line.size() || line[pos] == '#';
  }
  std::size_t column() const { return pos + 1; }
  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos]) && line[pos] != '#') ++pos;
    return std::string(line.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what, std::size_t col) const {
    throw ParseError(what, 0, lineno, col);
  }
};

template <class T>
T parse_unsigned(Cursor& c, const char* what) {
  c.skip();
  std::size_t col = c.column();
  std::string w = c.word();
  if (w.empty()) c.fail(std::string("expected ") + what, col);
  T v{};
  auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || end != w.data() + w.size()) c.fail(std::string("invalid ") + what + " '" + w + "'", col);
  if (!c.at_end()) c.fail("unexpected text after " + std::string(what), c.column());
  return v;
}

SourceExpr rest_of_line(Cursor& c, const char* directive) {
  c.skip();
  if (c.at_end()) c.fail(std::string("'") + directive + "' needs an equation", c.column());
  return {std::string(c.line.substr(c.pos)), c.lineno, c.column()};
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

}  // namespace

ArrangementFile parse_arrangement_file(std::string_view text, const std::string& source) {
  ArrangementFile f;
  f.source = source;
  bool have_vars = false;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    Cursor c{text.substr(start, end - start), ++lineno};
    start = end + 1;
    if (c.at_end()) continue;
    std::size_t col = c.column();
    std::string kw = c.word();
    if (kw == "vars") {
      if (have_vars) c.fail("duplicate 'vars' line", col);
      if (!f.components.empty() || f.curve) c.fail("'vars' must precede the equations", col);
      std::vector<std::string> names;
      while (!c.at_end()) {
        std::size_t vcol = (c.skip(), c.column());
        std::string name = c.word();
        if (!valid_identifier(name)) c.fail("invalid variable name '" + name + "'", vcol);
        for (const auto& n : names)
          if (n == name) c.fail("repeated variable '" + name + "'", vcol);
        names.push_back(name);
      }
      if (names.size() != 3) c.fail("expected exactly three variables", col);
      f.vars = names;
      have_vars = true;
    } else if (kw == "curve") {
      f.components.push_back(rest_of_line(c, "curve"));
    } else if (kw == "add") {
      if (f.curve) c.fail("only one 'add' line is allowed", col);
      f.curve = rest_of_line(c, "add");
    } else if (kw == "seed") {
      if (f.seed) c.fail("duplicate 'seed' line", col);
      f.seed = parse_unsigned<std::uint64_t>(c, "seed");
    } else if (kw == "option") {
      std::size_t ocol = (c.skip(), c.column());
      std::string name = c.word();
      if (name != "prime") c.fail("unknown option '" + name + "'", ocol);
      auto p = parse_unsigned<std::uint32_t>(c, "prime");
      if (p < 3 || p > 2147483647u) c.fail("prime out of range", ocol);
      for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) c.fail(std::to_string(p) + " is not prime", ocol);
      f.prime = p;
    } else {
      c.fail("unknown directive '" + kw + "'", col);
    }
  }
  if (f.components.empty()) throw ParseError("no 'curve' lines", 0, 1, 1);
  // Validate every equation now so errors surface with positions.
  for (const auto& e : f.components) f.parse_expr(e);
  if (f.curve) f.parse_expr(*f.curve);
  return f;
}

ArrangementFile load_arrangement_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of('/');
  return parse_arrangement_file(ss.str(), slash == std::string::npos ? path : path.substr(slash + 1));
}

Polynomial ArrangementFile::parse_expr(const SourceExpr& e) const {
  try {
    return parse_polynomial(e.text, vars);
  } catch (const ParseError& err) {
    std::string what = err.what();
    what = what.substr(0, what.rfind(" at line "));
    throw ParseError(what, err.offset(), e.line + err.line() - 1,
                     err.line() == 1 ? e.column + err.column() - 1 : err.column());
  }
}

std::vector<Polynomial> ArrangementFile::component_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& e : components) out.push_back(parse_expr(e));
  return out;
}

std::optional<Polynomial> ArrangementFile::curve_polynomial() const {
  if (!curve) return std::nullopt;
  return parse_expr(*curve);
}

std::string ArrangementFile::render() const {
  std::ostringstream os;
  os << "vars " << vars[0] << ' ' << vars[1] << ' ' << vars[2] << '\n';
  for (const auto& p : component_polynomials()) os << "curve " << to_string(p, vars) << '\n';
  if (auto c = curve_polynomial()) os << "add " << to_string(*c, vars) << '\n';
  if (seed) os << "seed " << *seed << '\n';
  if (prime) os << "option prime " << *prime << '\n';
  return os.str();
}

}  // namespace logvec
