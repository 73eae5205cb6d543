#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logcert/errors.hpp"
#include "logcert/recurrence.hpp"

namespace logcert {

namespace {

enum class Tok { integer, decimal, var, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based, within the line
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::integer:
      return "integer";
    case Tok::decimal:
      return "decimal literal";
    case Tok::var:
      return "'n'";
    case Tok::plus:
      return "'+'";
    case Tok::minus:
      return "'-'";
    case Tok::star:
      return "'*'";
    case Tok::caret:
      return "'^'";
    case Tok::slash:
      return "'/'";
    case Tok::lparen:
      return "'('";
    case Tok::rparen:
      return "')'";
    case Tok::end:
      return "end of expression";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s, std::size_t base_col, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    const std::size_t col = base_col + i;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Tok kind = Tok::integer;
      if (j < s.size() && s[j] == '.') {
        kind = Tok::decimal;
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({kind, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (ch) {
      case 'n':
        kind = Tok::var;
        break;
      case '+':
        kind = Tok::plus;
        break;
      case '-':
        kind = Tok::minus;
        break;
      case '*':
        kind = Tok::star;
        break;
      case '^':
        kind = Tok::caret;
        break;
      case '/':
        kind = Tok::slash;
        break;
      case '(':
        kind = Tok::lparen;
        break;
      case ')':
        kind = Tok::rparen;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    out.push_back({kind, std::string(1, ch), col});
    ++i;
  }
  out.push_back({Tok::end, "", base_col + s.size()});
  return out;
}

constexpr unsigned long kMaxExponent = 1000;

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  RationalFunction parse_ratio() {
    Poly num = parse_sum();
    Poly den(1);
    if (peek().kind == Tok::slash) {
      next();
      den = parse_sum();
      if (peek().kind == Tok::slash) fail("division nested below top level", peek());
      if (den.is_zero()) fail("denominator is the zero polynomial", toks_.back());
    }
    if (peek().kind != Tok::end) fail(std::string("unexpected ") + describe(peek().kind), peek());
    num_ = num;
    den_ = den;
    return RationalFunction(num, den);
  }

  const Poly& raw_num() const { return num_; }
  const Poly& raw_den() const { return den_; }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, line_, at.column); }

  Poly parse_sum() {
    Poly acc = parse_product();
    for (;;) {
      const Tok k = peek().kind;
      if (k != Tok::plus && k != Tok::minus) return acc;
      next();
      Poly rhs = parse_product();
      if (k == Tok::plus) acc += rhs;
      else acc -= rhs;
    }
  }

  Poly parse_product() {
    Poly acc = parse_unary();
    while (peek().kind == Tok::star) {
      next();
      acc *= parse_unary();
    }
    return acc;
  }

  Poly parse_unary() {
    if (peek().kind == Tok::minus) {
      next();
      return -parse_unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return parse_unary();
    }
    return parse_power();
  }

  Poly parse_power() {
    Poly base = parse_primary();
    if (peek().kind != Tok::caret) return base;
    next();
    const Token& e = peek();
    if (e.kind != Tok::integer) fail("non-integer exponent", e);
    next();
    const BigInt value(e.text, 10);
    if (value > kMaxExponent) fail("exponent too large", e);
    if (peek().kind == Tok::caret) fail("chained exponent", peek());
    return base.pow(static_cast<unsigned>(value.get_ui()));
  }

  Poly parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer:
        next();
        return Poly(QuadExt(BigRational(BigInt(t.text, 10))));
      case Tok::var:
        next();
        return Poly::variable();
      case Tok::lparen: {
        next();
        Poly inner = parse_sum();
        if (peek().kind == Tok::slash) fail("division nested below top level", peek());
        if (peek().kind != Tok::rparen) fail("expected ')'", peek());
        next();
        return inner;
      }
      case Tok::slash:
        fail("division nested below top level", t);
      case Tok::decimal:
        fail("decimal literals are not allowed", t);
      case Tok::end:
        fail("unexpected end of expression", t);
      default:
        fail(std::string("expected operand, found ") + describe(t.kind), t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  Poly num_;
  Poly den_;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-')) return false;
  }
  return true;
}

struct Field {
  std::string_view value;
  std::size_t line;
  std::size_t column;  // column of value start
};

BigRational parse_rational_field(std::string_view text, std::size_t line, std::size_t column) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw ParseError("invalid rational '" + std::string(text) + "'", line, column);
  }
}

}  // namespace

Recurrence parse_spec(std::string_view text) {
  std::map<std::string, Field, std::less<>> fields;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    if (trim(line, &lead).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, lead + 1);
    const std::string key(trim(line.substr(0, eq)));
    std::size_t vlead = 0;
    const std::string_view value = trim(line.substr(eq + 1), &vlead);
    const std::size_t vcol = eq + 2 + vlead;
    if (key != "name" && key != "offset" && key != "initial" && key != "b" && key != "c") {
      throw ParseError("unknown key '" + key + "'", line_no, lead + 1);
    }
    if (fields.count(key) != 0) throw ParseError("duplicate key '" + key + "'", line_no, lead + 1);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no, vcol);
    fields.emplace(key, Field{value, line_no, vcol});
  }
  for (const char* required : {"name", "initial", "b", "c"}) {
    if (fields.count(required) == 0) {
      throw ParseError(std::string("missing required key '") + required + "'", line_no, 1);
    }
  }

  const Field& name = fields.at("name");
  if (!valid_identifier(name.value)) throw ParseError("invalid identifier", name.line, name.column);

  std::int64_t offset = 0;
  if (auto it = fields.find("offset"); it != fields.end()) {
    const BigRational q = parse_rational_field(it->second.value, it->second.line, it->second.column);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p() || it->second.value.find('/') != std::string_view::npos) {
      throw ParseError("offset must be an integer", it->second.line, it->second.column);
    }
    offset = q.get_num().get_si();
  }

  const Field& init = fields.at("initial");
  const auto comma = init.value.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected two initial values", init.line, init.column);
  const BigRational s0 = parse_rational_field(init.value.substr(0, comma), init.line, init.column);
  const BigRational s1 = parse_rational_field(init.value.substr(comma + 1), init.line, init.column + comma + 1);
  if (sgn(s0) <= 0 || sgn(s1) <= 0) throw ParseError("initial values must be positive", init.line, init.column);

  auto parse_coeff = [](const Field& f) {
    ExprParser p(tokenize(f.value, f.column, f.line), f.line);
    p.parse_ratio();
    if (p.raw_den().is_zero()) throw ParseError("denominator is identically zero", f.line, f.column);
    return std::pair<Poly, Poly>(p.raw_num(), p.raw_den());
  };
  const auto [b_num, b_den] = parse_coeff(fields.at("b"));
  const auto [c_num, c_den] = parse_coeff(fields.at("c"));
  return make_recurrence(std::string(name.value), b_num, b_den, c_num, c_den, s0, s1, offset);
}

}  // namespace logcert
