#include "wfp/expr.hpp"

#include <algorithm>
#include <numeric>

namespace wfp {

char var_name(Var v) {
  static constexpr std::array<char, kNumCoords> kNames{'x', 'y', 'z', 't'};
  return kNames[index(v)];
}

std::optional<Var> var_from_name(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  switch (name[0]) {
    case 'x': return Var::x;
    case 'y': return Var::y;
    case 'z': return Var::z;
    case 't': return Var::t;
    default: return std::nullopt;
  }
}

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t coordinate_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.begin() + kNumCoords, std::uint32_t{0});
}

bool GradedLexFirst::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Expr::Expr(long value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical != 0) terms_.emplace(Exponents{}, canonical);
}

Expr Expr::variable(Var v) {
  Exponents e{};
  e[index(v)] = 1;
  return monomial(1, e);
}

Expr Expr::parameter() {
  Exponents e{};
  e[kSlotS] = 1;
  return monomial(1, e);
}

Expr Expr::monomial(const Rational& coefficient, const Exponents& exponents) {
  Rational canonical = coefficient;
  canonical.canonicalize();
  Expr out;
  out.add_term(exponents, canonical);
  return out;
}

bool Expr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

std::optional<Rational> Expr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

bool Expr::depends_on_parameter() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return term.first[kSlotS] != 0; });
}

int Expr::coordinate_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    degree = std::max(degree, static_cast<int>(wfp::coordinate_degree(e)));
  }
  return degree;
}

Rational Expr::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Expr::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Expr Expr::operator-() const {
  Expr out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Expr& Expr::operator+=(const Expr& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Expr& Expr::operator*=(const Expr& other) {
  *this = *this * other;
  return *this;
}

Expr Expr::pow(std::uint32_t exponent) const {
  Expr result(1);
  Expr base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Expr Expr::substitute_parameter(const Rational& value) const {
  Expr out;
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced[kSlotS] = 0;
    Rational factor = 1;
    for (std::uint32_t i = 0; i < e[kSlotS]; ++i) factor *= value;
    out.add_term(reduced, c * factor);
  }
  return out;
}

std::string to_string(const Rational& r) {
  Rational canonical = r;
  canonical.canonicalize();
  return canonical.get_str();
}

std::string Expr::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr std::array<char, 5> kSlotNames{'x', 'y', 'z', 't', 's'};
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rational magnitude = abs(c);
    const bool constant_monomial = (e == Exponents{});
    bool need_star = false;
    if (constant_monomial || magnitude != 1) {
      out += wfp::to_string(magnitude);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += '*';
      out += kSlotNames[i];
      if (e[i] > 1) out += '^' + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

Expr differentiate(const Expr& e, Var v) {
  const std::size_t slot = index(v);
  Expr out;
  for (const auto& [exps, c] : e.terms()) {
    if (exps[slot] == 0) continue;
    Exponents lowered = exps;
    lowered[slot] -= 1;
    out += Expr::monomial(c * exps[slot], lowered);
  }
  return out;
}

namespace {

double ipow(double base, std::uint32_t exponent) {
  double result = 1.0;
  for (std::uint32_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

double evaluate(const Expr& e, const Point4& p) {
  const std::array<double, 5> values{p.coords[0], p.coords[1], p.coords[2], p.coords[3], p.s};
  double sum = 0.0;
  for (const auto& [exps, c] : e.terms()) {
    double monomial = 1.0;
    for (std::size_t i = 0; i < exps.size(); ++i) monomial *= ipow(values[i], exps[i]);
    sum += c.get_d() * monomial;
  }
  return sum;
}

bool equals(const Expr& a, const Expr& b) { return (a - b).is_zero(); }

}  // namespace wfp
