#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wfp/models.hpp"

namespace wfp {
namespace {

using testing::point;
using testing::random_point;

std::vector<std::optional<Rational>> parameter_values(ModelName m) {
  if (!model_symbolic(m).uses_s) return {std::nullopt};
  return {Rational(-1), Rational(0), Rational(1), Rational(-3, 7)};
}

TEST(Model, Examples) {
  ModelSpec cusp = model(ModelName::cusp);
  EXPECT_EQ(cusp.casimirs.c1, parse("t"));
  EXPECT_EQ(cusp.casimirs.c2, parse("x^3 - 3*x*t + y^2 - z^2"));

  ModelSpec birth = model(ModelName::birth, Rational(0));
  EXPECT_EQ(birth.casimirs.c1, parse("t"));
  EXPECT_EQ(birth.casimirs.c2, parse("x^3 - 3*x*t^2 + y^2 - z^2"));

  ModelSpec flip = model("flip", Rational(1));
  EXPECT_EQ(flip.casimirs.c2, parse("x^4 - x^2 + x*t + y^2 - z^2"));
}

TEST(Model, Errors) {
  EXPECT_THROW((void)model("swallowtail"), UnknownModel);
  EXPECT_THROW((void)model(ModelName::birth), MissingParameter);
  EXPECT_THROW((void)model("wrinkle"), MissingParameter);
  // s is ignored by models without a parameter.
  EXPECT_EQ(model(ModelName::cusp, Rational(5)).casimirs.c2, parse("x^3 - 3*x*t + y^2 - z^2"));
}

TEST(Model, NamesRoundTrip) {
  for (ModelName m : kAllModels) EXPECT_EQ(model_from_name(model_name(m)), m);
}

TEST(Model, SymbolicKeepsParameter) {
  EXPECT_TRUE(model_symbolic(ModelName::merge).casimirs.c2.depends_on_parameter());
  EXPECT_FALSE(model(ModelName::merge, Rational(2)).casimirs.c2.depends_on_parameter());
}

TEST(ExpectedBivector, Examples) {
  Bivector cusp = expected_bivector(ModelName::cusp);
  EXPECT_EQ(cusp(0, 1), parse("2*z"));
  EXPECT_EQ(cusp(0, 2), parse("2*y"));
  EXPECT_EQ(cusp(1, 2), parse("3*t - 3*x^2"));

  Bivector merge = *model_symbolic(ModelName::merge).expected_bivector;
  EXPECT_EQ(merge(1, 2), parse("3*(s - t^2) - 3*x^2"));

  Bivector wrinkle = *model_symbolic(ModelName::wrinkle).expected_bivector;
  EXPECT_EQ(wrinkle(1, 2), parse("-(2*s*t + 4*t^2 + 4*x^2)"));
  EXPECT_EQ(wrinkle(0, 3), parse("4*y^2 + 4*z^2"));
}

TEST(ExpectedBivector, ConstructionReproducesEveryModel) {
  for (ModelName m : kAllModels) {
    for (const auto& s : parameter_values(m)) {
      ModelSpec spec = model(m, s);
      EXPECT_EQ(flaschka_ratiu(spec.casimirs), *spec.expected_bivector) << model_name(m);
    }
    ModelSpec sym = model_symbolic(m);
    EXPECT_EQ(flaschka_ratiu(sym.casimirs), *sym.expected_bivector) << model_name(m);
  }
}

TEST(ExpectedBivector, DerivedFlagOnlyForUnprintedModels) {
  for (ModelName m : kAllModels) {
    const bool derived = m == ModelName::lefschetz || m == ModelName::fold;
    EXPECT_EQ(model_symbolic(m).expected_is_derived, derived) << model_name(m);
  }
}

TEST(Model, CoordinateCasimirIsACasimir) {
  for (ModelName m : kAllModels) {
    ModelSpec spec = model_symbolic(m);
    if (!spec.coordinate_casimir) continue;
    EXPECT_TRUE(casimir_check(*spec.expected_bivector, Expr::variable(*spec.coordinate_casimir)));
  }
}

TEST(CriticalLocus, Examples) {
  CriticalLocus cusp = critical_locus_indicator(ModelName::cusp);
  EXPECT_TRUE(cusp(point(1, 0, 0, 1)));
  EXPECT_FALSE(cusp(point(0, 1, 0, 0)));
}

TEST(CriticalLocus, BirthNegativeParameterGrid) {
  CriticalLocus birth = critical_locus_indicator(ModelName::birth, Rational(-1));
  int hits = 0;
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b)
      for (int c = 0; c < 20; ++c)
        for (int d = 0; d < 20; ++d) {
          auto g = [](int i) { return -2.0 + 4.0 * i / 19.0; };
          hits += birth(point(g(a), g(b), g(c), g(d))) ? 1 : 0;
        }
  EXPECT_EQ(hits, 0);
}

TEST(CriticalLocus, BirthNegativeParameterIsNonEmptyOffGrid) {
  // y = z = 0, x^2 - t^2 = 1 is a real curve of critical points when s = -1.
  CriticalLocus birth = critical_locus_indicator(ModelName::birth, Rational(-1));
  EXPECT_TRUE(birth(point(1, 0, 0, 0)));
  EXPECT_TRUE(birth(point(std::sqrt(1.0 + 0.25), 0, 0, 0.5)));
}

TEST(CriticalLocus, AgreesWithRankZero) {
  std::mt19937_64 rng(55);
  for (ModelName m : kAllModels) {
    for (const auto& s : parameter_values(m)) {
      CriticalLocus locus = critical_locus_indicator(m, s);
      for (int n = 0; n < 200; ++n) {
        Point4 p = random_point(rng);
        EXPECT_EQ(locus(p), rank_at(locus.bivector(), p) == 0) << model_name(m);
      }
    }
  }
}

TEST(CriticalLocus, PolynomialsVanishOnIndicatedPoints) {
  ModelSpec cusp = model(ModelName::cusp);
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> u(-1.4, 1.4);
  for (int n = 0; n < 50; ++n) {
    const double x = u(rng);
    Point4 p = point(x, 0, 0, x * x);
    for (const Expr& e : cusp.critical_locus) EXPECT_EQ(evaluate(e, p), 0.0);
    EXPECT_TRUE(critical_locus_indicator(ModelName::cusp)(p));
  }
}

TEST(Model, LeafClosedFormsAndCharts) {
  EXPECT_FALSE(model(ModelName::lefschetz).expected_leaf_coefficient.has_value());
  EXPECT_FALSE(model(ModelName::fold).expected_leaf_coefficient.has_value());
  ModelSpec cusp = model(ModelName::cusp);
  ASSERT_TRUE(cusp.expected_leaf_coefficient.has_value());
  EXPECT_DOUBLE_EQ(cusp.expected_leaf_coefficient->evaluate(point(0, 1, 1, 1)), -1.0 / 3.0);
  ModelSpec merge = model(ModelName::merge, Rational(0));
  EXPECT_DOUBLE_EQ(merge.expected_leaf_coefficient->evaluate(point(1, 1, 0, 0)), 1.0 / 3.0);
  ModelSpec wrinkle = model(ModelName::wrinkle, Rational(0));
  EXPECT_DOUBLE_EQ(wrinkle.expected_leaf_coefficient->evaluate(point(0, 1, 0, 1)), -0.5);
  EXPECT_EQ(wrinkle.leaf_chart, (std::pair{Var::t, Var::z}));
}

}  // namespace
}  // namespace wfp
