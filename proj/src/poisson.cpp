#include "wfp/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wfp {

double pairing(const NumCovector4& alpha, const NumVector4& u) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kNumCoords; ++i) sum += alpha[i] * u[i];
  return sum;
}

NumCovector4 evaluate(const Covector4& c, const Point4& p) {
  NumCovector4 out;
  for (std::size_t i = 0; i < kNumCoords; ++i) out[i] = evaluate(c[i], p);
  return out;
}

NumVector4 evaluate(const Vector4& v, const Point4& p) {
  NumVector4 out;
  for (std::size_t i = 0; i < kNumCoords; ++i) out[i] = evaluate(v[i], p);
  return out;
}

Bivector::Bivector(ExprMatrix4 components, std::optional<Expr> conformal,
                   std::optional<CasimirPair> casimirs)
    : components_(std::move(components)),
      conformal_(std::move(conformal)),
      casimirs_(std::move(casimirs)) {
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    if (!components_[i][i].is_zero()) {
      throw std::invalid_argument("bivector diagonal entry " + std::to_string(i + 1) +
                                  " is not zero");
    }
    for (std::size_t j = i + 1; j < kNumCoords; ++j) {
      if (!(components_[i][j] + components_[j][i]).is_zero()) {
        throw std::invalid_argument("bivector entries (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") are not antisymmetric");
      }
    }
  }
}

Bivector Bivector::from_upper(const std::array<Expr, 6>& upper, std::optional<Expr> conformal) {
  ExprMatrix4 m;
  std::size_t n = 0;
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = i + 1; j < kNumCoords; ++j) {
      m[i][j] = upper[n];
      m[j][i] = -upper[n];
      ++n;
    }
  }
  return Bivector(std::move(m), std::move(conformal));
}

Expr Bivector::scaled(std::size_t i, std::size_t j) const {
  return conformal_ ? *conformal_ * components_[i][j] : components_[i][j];
}

Bivector Bivector::with_conformal(std::optional<Expr> k) const {
  return Bivector(components_, std::move(k), casimirs_);
}

Eigen::Matrix4d Bivector::evaluate(const Point4& p) const {
  const double k = conformal_ ? wfp::evaluate(*conformal_, p) : 1.0;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = i + 1; j < kNumCoords; ++j) {
      const double v = k * wfp::evaluate(components_[i][j], p);
      m(i, j) = v;
      m(j, i) = -v;
    }
  }
  return m;
}

Covector4 gradient(const Expr& c) {
  Covector4 out;
  for (Var v : kCoords) out[index(v)] = differentiate(c, v);
  return out;
}

Expr determinant(const ExprMatrix4& m) {
  std::array<std::size_t, kNumCoords> perm{0, 1, 2, 3};
  Expr det;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < kNumCoords; ++a) {
      for (std::size_t b = a + 1; b < kNumCoords; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    Expr product(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t row = 0; row < kNumCoords && !product.is_zero(); ++row) {
      product *= m[row][perm[row]];
    }
    det += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

void warn_if_vanishing(const Expr& k, Diagnostics* diagnostics) {
  if (diagnostics == nullptr) return;
  constexpr int kPerAxis = 10;
  Point4 p;
  for (int a = 0; a < kPerAxis; ++a) {
    for (int b = 0; b < kPerAxis; ++b) {
      for (int c = 0; c < kPerAxis; ++c) {
        for (int d = 0; d < kPerAxis; ++d) {
          const std::array<int, 4> idx{a, b, c, d};
          for (std::size_t n = 0; n < kNumCoords; ++n) {
            p.coords[n] = -2.0 + 4.0 * idx[n] / (kPerAxis - 1);
          }
          if (std::abs(evaluate(k, p)) <= 1e-12) {
            diagnostics->warn("conformal factor k = " + k.to_string() +
                              " vanishes at sample point (" + std::to_string(p.coords[0]) +
                              ", " + std::to_string(p.coords[1]) + ", " +
                              std::to_string(p.coords[2]) + ", " + std::to_string(p.coords[3]) +
                              "); k must be non-vanishing");
            return;
          }
        }
      }
    }
  }
}

}  // namespace

Bivector flaschka_ratiu(const CasimirPair& casimirs, std::optional<Expr> k,
                        Diagnostics* diagnostics) {
  if (k && k->is_zero()) {
    throw std::invalid_argument("conformal factor k must not be the zero polynomial");
  }
  if (k) warn_if_vanishing(*k, diagnostics);

  const Covector4 d1 = gradient(casimirs.c1);
  const Covector4 d2 = gradient(casimirs.c2);

  ExprMatrix4 components;
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = i + 1; j < kNumCoords; ++j) {
      ExprMatrix4 columns;
      for (std::size_t row = 0; row < kNumCoords; ++row) {
        columns[row][0] = Expr(row == i ? 1 : 0);
        columns[row][1] = Expr(row == j ? 1 : 0);
        columns[row][2] = d1[row];
        columns[row][3] = d2[row];
      }
      components[i][j] = determinant(columns);
      components[j][i] = -components[i][j];
    }
  }
  return Bivector(std::move(components), std::move(k), casimirs);
}

std::string triple_name(const Triple& t) {
  return std::string{'(', var_name(kCoords[t.i]), ',', var_name(kCoords[t.j]), ',',
                     var_name(kCoords[t.k]), ')'};
}

std::array<Expr, 4> jacobiator(const Bivector& b) {
  ExprMatrix4 p;
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = 0; j < kNumCoords; ++j) p[i][j] = b.scaled(i, j);
  }
  // dp[l][i][j] = d_l p^{ij}
  std::array<ExprMatrix4, kNumCoords> dp;
  for (std::size_t l = 0; l < kNumCoords; ++l) {
    for (std::size_t i = 0; i < kNumCoords; ++i) {
      for (std::size_t j = 0; j < kNumCoords; ++j) dp[l][i][j] = differentiate(p[i][j], kCoords[l]);
    }
  }

  std::array<Expr, 4> out;
  for (std::size_t n = 0; n < kTriples.size(); ++n) {
    const auto [i, j, k] = kTriples[n];
    Expr sum;
    for (std::size_t l = 0; l < kNumCoords; ++l) {
      sum += p[i][l] * dp[l][j][k];
      sum += p[j][l] * dp[l][k][i];
      sum += p[k][l] * dp[l][i][j];
    }
    out[n] = std::move(sum);
  }
  return out;
}

PoissonVerdict is_poisson(const Bivector& b) {
  const auto jac = jacobiator(b);
  for (std::size_t n = 0; n < jac.size(); ++n) {
    if (!jac[n].is_zero()) return PoissonVerdict{false, kTriples[n], jac[n]};
  }
  return PoissonVerdict{};
}

bool casimir_check(const Bivector& b, const Expr& c) {
  const Covector4 dc = gradient(c);
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    Expr row;
    for (std::size_t j = 0; j < kNumCoords; ++j) row += b.scaled(i, j) * dc[j];
    if (!row.is_zero()) return false;
  }
  return true;
}

int rank(const Eigen::Matrix4d& m) {
  const double largest = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  const double threshold = kRankRelativeThreshold * largest;
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(m);
  const auto& sv = svd.singularValues();
  return static_cast<int>((sv.array() > threshold).count());
}

int rank_at(const Bivector& b, const Point4& p, Diagnostics* diagnostics) {
  if (diagnostics != nullptr && b.conformal() && evaluate(*b.conformal(), p) == 0.0) {
    diagnostics->warn("conformal factor vanishes at the evaluation point");
  }
  return rank(b.evaluate(p));
}

Vector4 hamiltonian_field(const Bivector& b, const Expr& h) {
  const Covector4 dh = gradient(h);
  Vector4 out;
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    Expr sum;
    for (std::size_t j = 0; j < kNumCoords; ++j) sum += b.scaled(i, j) * dh[j];
    out[i] = std::move(sum);
  }
  return out;
}

bool StructureConstants::is_zero() const {
  for (const auto& plane : table) {
    for (const auto& row : plane) {
      for (const auto& entry : row) {
        if (!entry.is_zero()) return false;
      }
    }
  }
  return true;
}

StructureConstants linear_part(const Bivector& b) {
  if (b.conformal() && !(*b.conformal() == Expr(1))) {
    throw std::invalid_argument("linear part requires conformal factor k = 1");
  }
  StructureConstants out;
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = 0; j < kNumCoords; ++j) {
      Expr constant;
      for (const auto& [e, c] : b(i, j).terms()) {
        const auto degree = coordinate_degree(e);
        if (degree == 0) {
          constant += Expr::monomial(c, e);
        } else if (degree == 1) {
          const auto l = static_cast<std::size_t>(
              std::find(e.begin(), e.begin() + kNumCoords, 1U) - e.begin());
          Exponents rest = e;
          rest[l] = 0;
          out.table[i][j][l] += Expr::monomial(c, rest);
        }
      }
      if (i < j && !constant.is_zero()) {
        out.dropped.push_back(std::string{'{', var_name(kCoords[i]), ',', var_name(kCoords[j]),
                                          '}', ':', ' '} +
                              constant.to_string());
      }
    }
  }
  return out;
}

}  // namespace wfp
