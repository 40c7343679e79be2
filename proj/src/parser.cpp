// Recursive-descent parser for the polynomial grammar:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := var | rational | '(' expr ')' | '-' factor
//   var      := 'x' | 'y' | 'z' | 't' | 's'
//   rational := int ('/' nat)?

#include <algorithm>
#include <cctype>
#include <string>

#include "wfp/expr.hpp"

namespace wfp {

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void check_exponents(const Expr& e, std::size_t column) {
  for (const auto& [exps, c] : e.terms()) {
    for (auto power : exps) {
      if (power > kMaxExponent) {
        throw OverflowError("column " + std::to_string(column) + ": exponent exceeds " +
                            std::to_string(kMaxExponent));
      }
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", column());
    Expr result = parse_expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", column());
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t column() const { return pos_ + 1; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Expr parse_expr() {
    Expr acc = parse_term();
    for (;;) {
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    while (accept('*')) {
      const std::size_t col = column();
      acc *= parse_factor();
      check_exponents(acc, col);
    }
    return acc;
  }

  Expr parse_factor() {
    Expr base = parse_base();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t col = column();
    const std::string digits = read_digits("exponent");
    if (digits.size() > 3 || std::stoul(digits) > kMaxExponent) {
      throw OverflowError("column " + std::to_string(col) + ": exponent " + digits +
                          " exceeds " + std::to_string(kMaxExponent));
    }
    Expr result = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
    check_exponents(result, col);
    return result;
  }

  Expr parse_base() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", column());
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", column());
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -parse_factor();
    }
    if (is_digit(c)) return parse_rational_literal();
    if (c == 's') {
      ++pos_;
      return Expr::parameter();
    }
    if (auto v = var_from_name(text_.substr(pos_, 1))) {
      ++pos_;
      return Expr::variable(*v);
    }
    throw ParseError(std::string("unexpected '") + c + "'", column());
  }

  Expr parse_rational_literal() {
    const std::string numerator = read_digits("integer");
    skip_space();
    if (peek() != '/') return Expr(Rational(mpz_class(numerator, 10)));
    ++pos_;
    skip_space();
    const std::size_t col = column();
    const std::string denominator = read_digits("denominator");
    mpz_class den(denominator, 10);
    if (den == 0) throw ParseError("zero denominator", col);
    Rational value(mpz_class(numerator, 10), den);
    value.canonicalize();
    return Expr(value);
  }

  std::string read_digits(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start + 1);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("not a rational number: '" + std::string(text) + "'", 1);
  };
  std::string s(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string body = s.substr(pos);
  if (body.empty()) return fail();

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    auto all_digits = [](const std::string& d) {
      return !d.empty() && std::all_of(d.begin(), d.end(), is_digit);
    };
    if (!all_digits(num) || !all_digits(den)) return fail();
    if (mpz_class(den, 10) == 0) return fail();
    value = Rational(mpz_class(num, 10), mpz_class(den, 10));
  } else {
    auto dot = body.find('.');
    std::string whole = body.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!std::all_of(whole.begin(), whole.end(), is_digit) ||
        !std::all_of(frac.begin(), frac.end(), is_digit)) {
      return fail();
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class digits(whole + frac, 10);
    value = Rational(digits, scale);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace wfp
