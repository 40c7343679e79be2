#include "wfp/models.hpp"

#include <algorithm>
#include <cmath>

namespace wfp {

namespace {

struct ModelRow {
  ModelName name;
  std::string_view id;
  bool uses_s;
  std::string_view c1;
  std::string_view c2;
  // k = 1 components xy, xz, xt, yz, yt, zt.
  std::array<std::string_view, 6> bivector;
  bool derived;
  std::string_view leaf_numerator;  // empty: no closed form
  std::string_view leaf_denominator;
  std::optional<std::pair<Var, Var>> leaf_chart;
  std::optional<Var> coordinate_casimir;
};

// Lefschetz uses (z1, z2) = (x + iy, z + it); fold renames (t, x1, x2, x3)
// to (t, x, y, z). Their bivectors are frozen output of the determinant
// construction. The merge entry follows the printed matrix, whose {y,z}
// slot is 3(s - t^2) - 3x^2.
constexpr std::array<ModelRow, 7> kRows{{
    {ModelName::lefschetz, "lefschetz", false,
     "x^2 - y^2 + z^2 - t^2", "2*x*y + 2*z*t",
     {"4*t^2 + 4*z^2", "-4*t*x + 4*y*z", "-4*t*y - 4*x*z", "4*t*y + 4*x*z", "-4*t*x + 4*y*z",
      "4*x^2 + 4*y^2"},
     true, "", "", std::nullopt, std::nullopt},
    {ModelName::fold, "fold", false,
     "t", "-x^2 + y^2 + z^2",
     {"-2*z", "2*y", "0", "2*x", "0", "0"},
     true, "", "", std::nullopt, Var::t},
    {ModelName::cusp, "cusp", false,
     "t", "x^3 - 3*x*t + y^2 - z^2",
     {"2*z", "2*y", "0", "3*t - 3*x^2", "0", "0"},
     false, "1", "3*(x^2 - t)", std::pair{Var::y, Var::z}, Var::t},
    {ModelName::birth, "birth", true,
     "t", "x^3 - 3*x*(t^2 - s) + y^2 - z^2",
     {"2*z", "2*y", "0", "-3*(s - t^2 + x^2)", "0", "0"},
     false, "1", "3*(s - t^2 + x^2)", std::pair{Var::y, Var::z}, Var::t},
    {ModelName::merge, "merge", true,
     "t", "x^3 - 3*x*(s - t^2) + y^2 - z^2",
     {"2*z", "2*y", "0", "3*(s - t^2) - 3*x^2", "0", "0"},
     false, "1", "3*(t^2 - s + x^2)", std::pair{Var::y, Var::z}, Var::t},
    {ModelName::flip, "flip", true,
     "t", "x^4 - x^2*s + x*t + y^2 - z^2",
     {"2*z", "2*y", "0", "-(t - 2*s*x + 4*x^3)", "0", "0"},
     false, "1", "t - 2*s*x + 4*x^3", std::pair{Var::y, Var::z}, Var::t},
    {ModelName::wrinkle, "wrinkle", true,
     "t^2 - x^2 + y^2 - z^2 + s*t", "2*t*x + 2*y*z",
     {"-2*s*y - 4*t*y - 4*x*z", "-4*x*y + 2*s*z + 4*t*z", "4*y^2 + 4*z^2",
      "-(2*s*t + 4*t^2 + 4*x^2)", "4*(x*y - t*z)", "-4*(t*y + x*z)"},
     false, "-1", "2*(t*y + x*z)", std::pair{Var::t, Var::z}, std::nullopt},
}};

const ModelRow& row(ModelName name) {
  return *std::find_if(kRows.begin(), kRows.end(),
                       [name](const ModelRow& r) { return r.name == name; });
}

Expr bind_parameter(const Expr& e, const std::optional<Rational>& s) {
  return s ? e.substitute_parameter(*s) : e;
}

Expr parse_bound(std::string_view text, const std::optional<Rational>& s) {
  return bind_parameter(parse(text), s);
}

ModelSpec build(ModelName name, std::optional<Rational> s) {
  const ModelRow& r = row(name);
  if (!r.uses_s) s.reset();

  ModelSpec spec;
  spec.name = name;
  spec.uses_s = r.uses_s;
  spec.s = s;
  spec.casimirs = CasimirPair{parse_bound(r.c1, s), parse_bound(r.c2, s)};

  std::array<Expr, 6> upper;
  for (std::size_t n = 0; n < upper.size(); ++n) upper[n] = parse_bound(r.bivector[n], s);
  spec.expected_bivector = Bivector::from_upper(upper);
  spec.expected_is_derived = r.derived;

  if (!r.leaf_numerator.empty()) {
    spec.expected_leaf_coefficient =
        LeafCoefficient{parse_bound(r.leaf_numerator, s), parse_bound(r.leaf_denominator, s)};
  }
  spec.leaf_chart = r.leaf_chart;
  spec.coordinate_casimir = r.coordinate_casimir;

  if (name == ModelName::cusp) {
    spec.critical_locus = {parse("x^2 - t"), parse("y"), parse("z")};
  } else {
    const Bivector b = flaschka_ratiu(spec.casimirs);
    for (std::size_t i = 0; i < kNumCoords; ++i) {
      for (std::size_t j = i + 1; j < kNumCoords; ++j) {
        if (!b(i, j).is_zero()) spec.critical_locus.push_back(b(i, j));
      }
    }
  }
  return spec;
}

}  // namespace

std::string_view model_name(ModelName m) { return row(m).id; }

ModelName model_from_name(std::string_view name) {
  for (const auto& r : kRows) {
    if (r.id == name) return r.name;
  }
  throw UnknownModel("unknown model '" + std::string(name) +
                     "' (expected lefschetz, fold, cusp, birth, merge, flip or wrinkle)");
}

ModelSpec model(ModelName name, std::optional<Rational> s) {
  if (row(name).uses_s && !s) {
    throw MissingParameter("model '" + std::string(model_name(name)) +
                           "' requires a value for the parameter s");
  }
  return build(name, std::move(s));
}

ModelSpec model(std::string_view name, std::optional<Rational> s) {
  return model(model_from_name(name), std::move(s));
}

ModelSpec model_symbolic(ModelName name) { return build(name, std::nullopt); }

Bivector expected_bivector(ModelName name, std::optional<Rational> s) {
  return *model(name, std::move(s)).expected_bivector;
}

bool CriticalLocus::operator()(const Point4& p) const {
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = i + 1; j < kNumCoords; ++j) {
      if (std::abs(evaluate(bivector_(i, j), p)) > kCriticalTolerance) return false;
    }
  }
  return true;
}

CriticalLocus critical_locus_indicator(ModelName name, std::optional<Rational> s) {
  return CriticalLocus(flaschka_ratiu(model(name, std::move(s)).casimirs));
}

}  // namespace wfp
