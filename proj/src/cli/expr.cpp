#include "nonint/cli/expr.hpp"

#include <cctype>
#include <optional>

namespace nonint::cli {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

constexpr unsigned long kMaxExponent = 1000;

enum class Tok { number, rational, rt, xi, eta, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  Rational value;  // number and rational literals
  int line;
  int column;
};

class Lexer {
 public:
  Lexer(std::string_view text, int first_line) : text_(text), line_(first_line) {}

  Token next() {
    skip_space();
    const int line = line_;
    const int col = col_;
    if (pos_ >= text_.size()) return {Tok::end, 0, line, col};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      // p/q with no space is a rational literal.
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        advance();
        const std::string den = digits();
        const Integer d(den);
        if (d == 0) throw ParseError(line, col, "zero denominator in rational literal");
        return {Tok::rational, Rational(Integer(num), d), line, col};
      }
      return {Tok::number, Rational(Integer(num)), line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word += text_[pos_];
        advance();
      }
      if (word == "rt") return {Tok::rt, 0, line, col};
      if (word == "xi") return {Tok::xi, 0, line, col};
      if (word == "eta") return {Tok::eta, 0, line, col};
      throw ParseError(line, col, "unknown identifier '" + word + "'");
    }
    advance();
    switch (c) {
      case '+':
        return {Tok::plus, 0, line, col};
      case '-':
        return {Tok::minus, 0, line, col};
      case '*':
        return {Tok::star, 0, line, col};
      case '^':
        return {Tok::caret, 0, line, col};
      case '/':
        return {Tok::slash, 0, line, col};
      case '(':
        return {Tok::lparen, 0, line, col};
      case ')':
        return {Tok::rparen, 0, line, col};
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  std::string digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, FieldSpec field, int first_line) : lex_(text, first_line), field_(field) {
    cur_ = lex_.next();
  }

  // top := sum ['/' sum] end
  std::pair<BiPoly, std::optional<BiPoly>> top(bool allow_division) {
    BiPoly num = sum();
    std::optional<BiPoly> den;
    if (cur_.kind == Tok::slash) {
      if (!allow_division) throw error("division is only allowed in rational-function expressions");
      take();
      const Token at = cur_;
      den = sum();
      if (den->is_zero()) throw ParseError(at.line, at.column, "denominator is zero");
      if (cur_.kind == Tok::slash) throw error("at most one top-level '/' is allowed");
    }
    if (cur_.kind != Tok::end) throw error("unexpected " + describe(cur_.kind));
    return {num, den};
  }

 private:
  BiPoly sum() {
    BiPoly acc = term();
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      const bool minus = cur_.kind == Tok::minus;
      take();
      BiPoly t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (cur_.kind == Tok::star) {
      take();
      acc = acc * unary();
    }
    return acc;
  }

  BiPoly unary() {
    if (cur_.kind == Tok::minus) {
      take();
      return -unary();
    }
    if (cur_.kind == Tok::plus) {
      take();
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (cur_.kind != Tok::caret) return base;
    take();
    bool parens = false;
    if (cur_.kind == Tok::lparen) {
      parens = true;
      take();
    }
    if (cur_.kind == Tok::minus) throw error("negative exponents are not allowed");
    if (cur_.kind != Tok::number) throw error("exponent must be a nonnegative integer literal");
    const Token e = cur_;
    take();
    if (parens) expect(Tok::rparen);
    if (e.value > kMaxExponent) throw ParseError(e.line, e.column, "exponent too large");
    if (cur_.kind == Tok::caret) throw error("chained exponents need parentheses");
    return pow(base, static_cast<unsigned>(e.value.get_num().get_ui()));
  }

  BiPoly primary() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::number:
      case Tok::rational:
        take();
        return BiPoly(QuadExt(t.value));
      case Tok::rt:
        if (field_.is_rational_field()) throw error("'rt' needs a field Q(sqrt(d)) with d != 1");
        take();
        return BiPoly(QuadExt::surd(field_));
      case Tok::xi:
        take();
        return BiPoly::xi();
      case Tok::eta:
        take();
        return BiPoly::eta();
      case Tok::lparen: {
        take();
        BiPoly inner = sum();
        if (cur_.kind == Tok::slash) throw error("division is only allowed at the top level");
        expect(Tok::rparen);
        return inner;
      }
      default:
        throw error("expected a number, 'rt', 'xi', 'eta' or '(' but found " + describe(t.kind));
    }
  }

  static std::string describe(Tok k) {
    switch (k) {
      case Tok::number:
      case Tok::rational:
        return "number";
      case Tok::rt:
        return "'rt'";
      case Tok::xi:
        return "'xi'";
      case Tok::eta:
        return "'eta'";
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
        return "end of input";
    }
    return "token";
  }

  void take() { cur_ = lex_.next(); }
  void expect(Tok k) {
    if (cur_.kind != k) throw error("expected " + describe(k) + " but found " + describe(cur_.kind));
    take();
  }
  ParseError error(const std::string& msg) const { return ParseError(cur_.line, cur_.column, msg); }

  Lexer lex_;
  FieldSpec field_;
  Token cur_;
};

UPoly xi_only(const BiPoly& p, int line) {
  if (p.eta_degree() > 0) throw ParseError(line, 1, "'eta' is not allowed in a function of xi");
  return p.eta_coefficients().empty() ? UPoly() : p.eta_coefficients()[0];
}

}  // namespace

BiPoly parse_bipoly(std::string_view text, FieldSpec field, int first_line) {
  Parser parser(text, field, first_line);
  return parser.top(false).first;
}

RatFunc parse_ratfunc(std::string_view text, FieldSpec field, int first_line) {
  Parser parser(text, field, first_line);
  const auto [num, den] = parser.top(true);
  const UPoly n = xi_only(num, first_line);
  if (!den) return RatFunc(n);
  return RatFunc(n, xi_only(*den, first_line));
}

QuadExt parse_scalar(std::string_view text, FieldSpec field, int first_line) {
  const RatFunc f = parse_ratfunc(text, field, first_line);
  if (!f.is_constant()) throw ParseError(first_line, 1, "expected a constant");
  return f.num().coeff(0) / f.den().coeff(0);
}

std::string print(const BiPoly& p) { return p.to_string(); }
std::string print(const RatFunc& f) { return f.to_string(); }
std::string print(const QuadExt& c) { return c.to_string(); }

}  // namespace nonint::cli
