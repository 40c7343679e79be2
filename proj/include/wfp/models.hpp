#pragma once

// Catalogue of local chart models for broken and wrinkled fibrations and
// the one-parameter moves between them.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wfp/expr.hpp"
#include "wfp/poisson.hpp"

namespace wfp {

enum class ModelName { lefschetz, fold, cusp, birth, merge, flip, wrinkle };

inline constexpr std::array<ModelName, 7> kAllModels{
    ModelName::lefschetz, ModelName::fold,  ModelName::cusp,   ModelName::birth,
    ModelName::merge,     ModelName::flip,  ModelName::wrinkle};

std::string_view model_name(ModelName m);

class UnknownModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ModelName model_from_name(std::string_view name);

// Rational function numerator / denominator.
struct LeafCoefficient {
  Expr numerator;
  Expr denominator;

  double evaluate(const Point4& p) const {
    return wfp::evaluate(numerator, p) / wfp::evaluate(denominator, p);
  }
};

struct ModelSpec {
  ModelName name;
  bool uses_s = false;
  std::optional<Rational> s;  // nullopt: s left symbolic (or unused)
  CasimirPair casimirs;
  std::optional<Bivector> expected_bivector;
  // Closed-form leaf coefficient at k = 1, against the area form of the
  // coordinate pair leaf_chart.
  std::optional<LeafCoefficient> expected_leaf_coefficient;
  std::optional<std::pair<Var, Var>> leaf_chart;
  // Polynomials whose common zero set is the critical locus.
  std::vector<Expr> critical_locus;
  // Set when one Casimir is a bare coordinate (t for all models but
  // lefschetz and wrinkle).
  std::optional<Var> coordinate_casimir;
  // True when expected_bivector is this toolkit's own frozen output rather
  // than a transcription.
  bool expected_is_derived = false;
};

// s is required iff the model uses it; ignored otherwise.
ModelSpec model(ModelName name, std::optional<Rational> s = std::nullopt);
ModelSpec model(std::string_view name, std::optional<Rational> s = std::nullopt);

// Keeps s as a symbol in every formula.
ModelSpec model_symbolic(ModelName name);

Bivector expected_bivector(ModelName name, std::optional<Rational> s = std::nullopt);

inline constexpr double kCriticalTolerance = 1e-9;

// True at p iff every component of the constructed bivector is below
// kCriticalTolerance in magnitude, i.e. dC1 ^ dC2 vanishes at p.
class CriticalLocus {
 public:
  explicit CriticalLocus(Bivector bivector) : bivector_(std::move(bivector)) {}
  bool operator()(const Point4& p) const;
  const Bivector& bivector() const { return bivector_; }

 private:
  Bivector bivector_;
};

CriticalLocus critical_locus_indicator(ModelName name, std::optional<Rational> s = std::nullopt);

}  // namespace wfp
