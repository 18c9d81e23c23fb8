#include "h10/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "h10/errors.hpp"

namespace h10 {

const char* parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::lexical: return "lexical";
    case ParseErrorKind::syntax: return "syntax";
    case ParseErrorKind::exponent: return "exponent";
    case ParseErrorKind::forced_arity: return "forced-arity";
  }
  return "unknown";
}

namespace {

enum class Tok { integer, variable, plus, minus, star, caret, lparen, rparen, equals, arity, end };

struct Token {
  Tok kind = Tok::end;
  SourceSpan span;
  BigInt value;    // integer literal or forced arity
  unsigned index = 0;  // variable index
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(std::size_t begin, std::size_t end, const std::string& message) {
    throw ParseError(ParseErrorKind::lexical, SourceSpan{begin, end}, message);
  }

  std::size_t scan_digits(std::size_t from) {
    std::size_t to = from;
    while (to < text_.size() && std::isdigit(static_cast<unsigned char>(text_[to]))) ++to;
    return to;
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t begin = pos_;
    if (pos_ >= text_.size()) {
      current_ = Token{Tok::end, SourceSpan{begin, begin}, 0, 0};
      return;
    }
    const char c = text_[pos_];
    auto simple = [&](Tok kind) {
      ++pos_;
      current_ = Token{kind, SourceSpan{begin, pos_}, 0, 0};
    };
    switch (c) {
      case '+': simple(Tok::plus); return;
      case '-': simple(Tok::minus); return;
      case '*': simple(Tok::star); return;
      case '^': simple(Tok::caret); return;
      case '(': simple(Tok::lparen); return;
      case ')': simple(Tok::rparen); return;
      case '=': simple(Tok::equals); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t end = scan_digits(pos_);
      Token t{Tok::integer, SourceSpan{begin, end}, BigInt(std::string(text_.substr(begin, end - begin))), 0};
      pos_ = end;
      current_ = t;
      return;
    }
    if (c == 'x') {
      const std::size_t end = scan_digits(pos_ + 1);
      if (end == pos_ + 1) {
        fail(begin, pos_ + 1, "expected a variable index after 'x'");
      }
      BigInt index{std::string(text_.substr(pos_ + 1, end - pos_ - 1))};
      if (index == 0) {
        fail(begin, end, "variable indices start at x1");
      }
      if (index > 4096) {
        fail(begin, end, "variable index out of supported range");
      }
      Token t{Tok::variable, SourceSpan{begin, end}, 0, index.convert_to<unsigned>()};
      pos_ = end;
      current_ = t;
      return;
    }
    if (c == '@') {
      static constexpr std::string_view keyword = "@arity=";
      if (text_.substr(pos_).substr(0, keyword.size()) != keyword) {
        fail(begin, std::min(pos_ + keyword.size(), text_.size()), "expected \"@arity=<k>\"");
      }
      const std::size_t digits_begin = pos_ + keyword.size();
      const std::size_t end = scan_digits(digits_begin);
      if (end == digits_begin) {
        fail(begin, digits_begin, "expected a positive integer after \"@arity=\"");
      }
      Token t{Tok::arity, SourceSpan{begin, end}, BigInt(std::string(text_.substr(digits_begin, end - digits_begin))), 0};
      pos_ = end;
      current_ = t;
      return;
    }
    fail(begin, pos_ + 1, std::string("character '") + c + "' is not in the equation grammar");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class EquationParser {
 public:
  explicit EquationParser(std::string_view text) : lexer_(text) {}

  Equation parse() {
    Polynomial lhs = parse_expr();
    expect(Tok::equals, "expected '='");
    Polynomial rhs = parse_expr();
    std::optional<Token> forced;
    if (lexer_.peek().kind == Tok::arity) {
      forced = lexer_.take();
    }
    const Token& trailing = lexer_.peek();
    if (trailing.kind != Tok::end) {
      throw ParseError(ParseErrorKind::syntax, trailing.span, "unexpected trailing input");
    }
    unsigned arity = std::max(max_var_, 1u);
    if (forced) {
      if (forced->value < max_var_) {
        throw ParseError(ParseErrorKind::forced_arity, forced->span,
                         "forced arity " + forced->value.str() + " is below the largest variable index x" +
                             std::to_string(max_var_));
      }
      if (forced->value == 0) {
        throw ParseError(ParseErrorKind::forced_arity, forced->span, "forced arity must be >= 1");
      }
      if (forced->value > 4096) {
        throw ParseError(ParseErrorKind::forced_arity, forced->span, "forced arity out of supported range");
      }
      arity = std::max(arity, forced->value.convert_to<unsigned>());
    }
    Polynomial difference = lhs - rhs;
    return Equation(difference.with_arity(arity), arity);
  }

 private:
  void expect(Tok kind, const std::string& message) {
    if (lexer_.peek().kind != kind) {
      throw ParseError(ParseErrorKind::syntax, lexer_.peek().span, message);
    }
    lexer_.take();
  }

  Polynomial parse_expr() {
    bool negate = false;
    if (lexer_.peek().kind == Tok::plus) {
      lexer_.take();
    } else if (lexer_.peek().kind == Tok::minus) {
      lexer_.take();
      negate = true;
    }
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    while (lexer_.peek().kind == Tok::plus || lexer_.peek().kind == Tok::minus) {
      const bool subtract = lexer_.take().kind == Tok::minus;
      Polynomial term = parse_term();
      acc = subtract ? acc - term : acc + term;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (lexer_.peek().kind == Tok::star) {
      lexer_.take();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (lexer_.peek().kind != Tok::caret) return base;
    lexer_.take();
    const Token& exp = lexer_.peek();
    if (exp.kind == Tok::minus) {
      throw ParseError(ParseErrorKind::exponent, exp.span, "exponents must be non-negative");
    }
    if (exp.kind != Tok::integer) {
      throw ParseError(ParseErrorKind::exponent, exp.span,
                       "exponent must be a non-negative integer literal");
    }
    Token t = lexer_.take();
    if (t.value > 512) {
      throw ParseError(ParseErrorKind::exponent, t.span, "exponent out of supported range");
    }
    unsigned e = t.value.convert_to<unsigned>();
    Polynomial acc = Polynomial::constant(1);
    Polynomial b = base;
    while (e > 0) {
      if (e & 1u) acc = acc * b;
      b = b * b;
      e >>= 1u;
    }
    return acc;
  }

  Polynomial parse_atom() {
    const Token& t = lexer_.peek();
    switch (t.kind) {
      case Tok::integer: {
        Token lit = lexer_.take();
        return Polynomial::constant(lit.value);
      }
      case Tok::variable: {
        Token var = lexer_.take();
        max_var_ = std::max(max_var_, var.index);
        return Polynomial::variable(var.index, var.index);
      }
      case Tok::lparen: {
        lexer_.take();
        Polynomial inner = parse_expr();
        expect(Tok::rparen, "expected ')'");
        return inner;
      }
      default:
        throw ParseError(ParseErrorKind::syntax, t.span,
                         "expected an integer, a variable, or '('");
    }
  }

  Lexer lexer_;
  unsigned max_var_ = 0;
};

}  // namespace

Equation parse_equation(std::string_view text) { return EquationParser(text).parse(); }

std::string render_equation(const Equation& eq) {
  std::ostringstream out;
  out << eq.lhs.str() << " = 0 @arity=" << eq.arity;
  return out.str();
}

QTuple parse_tuple(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& message) {
    throw ValidationError("tuple \"" + std::string(text) + "\": " + message);
  };
  skip_space();
  if (pos >= text.size() || text[pos] != '(') fail("expected '('");
  ++pos;
  QTuple tuple;
  for (;;) {
    skip_space();
    std::size_t begin = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
      ++pos;
    }
    if (pos == begin) fail("expected a rational component");
    tuple.push_back(Rational::parse(text.substr(begin, pos - begin)));
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
  ++pos;
  skip_space();
  if (pos != text.size()) fail("unexpected trailing input");
  return tuple;
}

std::string render_tuple(const QTuple& tuple) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ", ";
    out << tuple[i].str();
  }
  out << ")";
  return out.str();
}

}  // namespace h10
