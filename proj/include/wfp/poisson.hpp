#pragma once

// Bivectors on R^4 built from a pair of Casimir functions, and the exact
// checks run on them (Jacobi identity, Casimir annihilation, rank, linear
// part).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wfp/expr.hpp"

namespace wfp {

struct CasimirPair {
  Expr c1;
  Expr c2;
};

// Index-placement tags keep one-forms and vectors from being mixed up.
struct Covariant {};
struct Contravariant {};

template <class Tag, class T>
struct Tuple4 {
  std::array<T, kNumCoords> entries{};

  const T& operator[](std::size_t i) const { return entries[i]; }
  T& operator[](std::size_t i) { return entries[i]; }
  friend bool operator==(const Tuple4&, const Tuple4&) = default;
};

using Covector4 = Tuple4<Covariant, Expr>;
using Vector4 = Tuple4<Contravariant, Expr>;
using NumCovector4 = Tuple4<Covariant, double>;
using NumVector4 = Tuple4<Contravariant, double>;

double pairing(const NumCovector4& alpha, const NumVector4& u);
NumCovector4 evaluate(const Covector4& c, const Point4& p);
NumVector4 evaluate(const Vector4& v, const Point4& p);

using ExprMatrix4 = std::array<std::array<Expr, kNumCoords>, kNumCoords>;

// Non-fatal findings (e.g. a conformal factor that vanishes on samples).
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

class Bivector {
 public:
  // Throws std::invalid_argument unless components is exactly antisymmetric.
  explicit Bivector(ExprMatrix4 components, std::optional<Expr> conformal = std::nullopt,
                    std::optional<CasimirPair> casimirs = std::nullopt);

  // Builds from the six entries above the diagonal, ordered
  // xy, xz, xt, yz, yt, zt.
  static Bivector from_upper(const std::array<Expr, 6>& upper,
                             std::optional<Expr> conformal = std::nullopt);

  const Expr& operator()(std::size_t i, std::size_t j) const { return components_[i][j]; }
  const ExprMatrix4& components() const { return components_; }
  const std::optional<Expr>& conformal() const { return conformal_; }
  const std::optional<CasimirPair>& casimirs() const { return casimirs_; }

  // k * pi^{ij}; an absent k counts as 1.
  Expr scaled(std::size_t i, std::size_t j) const;
  Expr conformal_or_one() const { return conformal_.value_or(Expr(1)); }

  Bivector with_conformal(std::optional<Expr> k) const;

  // Numeric matrix k(p) * pi^{ij}(p).
  Eigen::Matrix4d evaluate(const Point4& p) const;

  friend bool operator==(const Bivector& a, const Bivector& b) {
    return a.components_ == b.components_ && a.conformal_ == b.conformal_;
  }

 private:
  ExprMatrix4 components_;
  std::optional<Expr> conformal_;
  std::optional<CasimirPair> casimirs_;
};

Covector4 gradient(const Expr& c);

// Leibniz expansion of a 4x4 polynomial determinant.
Expr determinant(const ExprMatrix4& m);

// pi^{ij} = det(e_i, e_j, dC1, dC2). Throws std::invalid_argument if k is
// the zero polynomial; warns if k vanishes on the sample grid.
Bivector flaschka_ratiu(const CasimirPair& casimirs, std::optional<Expr> k = std::nullopt,
                        Diagnostics* diagnostics = nullptr);

struct Triple {
  std::size_t i, j, k;
  friend bool operator==(const Triple&, const Triple&) = default;
};

inline constexpr std::array<Triple, 4> kTriples{
    Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 2, 3}, Triple{1, 2, 3}};

std::string triple_name(const Triple& t);

// One polynomial per entry of kTriples, computed on the scaled components.
std::array<Expr, 4> jacobiator(const Bivector& b);

struct PoissonVerdict {
  bool poisson = true;
  std::optional<Triple> triple;
  Expr witness;
};

PoissonVerdict is_poisson(const Bivector& b);

bool casimir_check(const Bivector& b, const Expr& c);

inline constexpr double kRankRelativeThreshold = 1e-9;

int rank(const Eigen::Matrix4d& m);
int rank_at(const Bivector& b, const Point4& p, Diagnostics* diagnostics = nullptr);

// X_h^i = sum_j k pi^{ij} d_j h, so that X_h(g) = {g, h}.
Vector4 hamiltonian_field(const Bivector& b, const Expr& h);

struct StructureConstants {
  // table[i][j][l] is the coefficient of x^l in {x^i, x^j}_lin. Entries are
  // free of x, y, z, t but may carry the parameter s.
  std::array<std::array<std::array<Expr, kNumCoords>, kNumCoords>, kNumCoords> table;
  // Constant terms dropped from the truncation, as "{x,y}: -3*s".
  std::vector<std::string> dropped;

  bool is_zero() const;
};

// Throws std::invalid_argument when the bivector has a conformal factor
// other than 1.
StructureConstants linear_part(const Bivector& b);

}  // namespace wfp
