#pragma once

// Exact sparse polynomials in the chart coordinates x, y, z, t and the move
// parameter s, with rational coefficients.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wfp {

using Rational = mpq_class;

// Differentiation variables. s is a parameter and deliberately not a Var.
enum class Var : std::uint8_t { x = 0, y = 1, z = 2, t = 3 };

inline constexpr std::size_t kNumCoords = 4;
inline constexpr std::size_t kSlotS = 4;
inline constexpr std::array<Var, kNumCoords> kCoords{Var::x, Var::y, Var::z, Var::t};

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }
char var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// Exponents of (x, y, z, t, s).
using Exponents = std::array<std::uint32_t, 5>;

std::uint32_t total_degree(const Exponents& e);
std::uint32_t coordinate_degree(const Exponents& e);

// Graded lexicographic order with x > y > z > t > s; "less" puts the leading
// monomial first so that map iteration is the printing order.
struct GradedLexFirst {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct Point4 {
  std::array<double, kNumCoords> coords{};
  double s = 0.0;

  double operator[](Var v) const { return coords[index(v)]; }
  double& operator[](Var v) { return coords[index(v)]; }
};

class Expr {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexFirst>;

  Expr() = default;
  Expr(long value);  // NOLINT(google-explicit-constructor)
  explicit Expr(const Rational& value);

  static Expr variable(Var v);
  static Expr parameter();
  static Expr monomial(const Rational& coefficient, const Exponents& exponents);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  bool depends_on_parameter() const;

  // Total degree in x, y, z, t (s excluded); -1 for the zero polynomial.
  int coordinate_degree() const;

  Rational coefficient(const Exponents& exponents) const;

  Expr operator-() const;
  Expr& operator+=(const Expr& other);
  Expr& operator-=(const Expr& other);
  Expr& operator*=(const Expr& other);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);

  friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }

  Expr pow(std::uint32_t exponent) const;

  // Replaces the parameter s by a rational value.
  Expr substitute_parameter(const Rational& value) const;

  // Parseable canonical text, e.g. "x^3 - 3*x*t + y^2 - z^2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

Expr differentiate(const Expr& e, Var v);

// Deterministic: terms are accumulated in graded-lex order.
double evaluate(const Expr& e, const Point4& p);

bool equals(const Expr& a, const Expr& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kMaxExponent = 64;

Expr parse(std::string_view text);

// Accepts "-3", "7/2", "0.125" and "-1.5"; decimals are converted exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace wfp
