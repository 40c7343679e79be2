#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <map>
#include <random>

#include "test_support.hpp"
#include "wfp/models.hpp"
#include "wfp/poisson.hpp"

namespace wfp {
namespace {

using testing::point;
using testing::random_point;
using testing::random_poly;

const Expr kConformal = parse("1 + x^2 + y^2 + z^2 + t^2");

Bivector upper(const std::array<const char*, 6>& entries) {
  std::array<Expr, 6> u;
  for (std::size_t n = 0; n < 6; ++n) u[n] = parse(entries[n]);
  return Bivector::from_upper(u);
}

// pi = dx^dy + x dz^dt
Bivector non_poisson() { return upper({"1", "0", "0", "0", "0", "x"}); }

// Determinant bivectors printed by tests/oracles/fr_goldens.py (sympy).
struct Golden {
  const char* c1;
  const char* c2;
  std::array<const char*, 6> pi;
};

const std::map<std::string, Golden>& goldens() {
  static const std::map<std::string, Golden> g{
      {"lefschetz",
       {"x^2 - y^2 + z^2 - t^2", "2*x*y + 2*z*t",
        {"4*t^2 + 4*z^2", "-4*t*x + 4*y*z", "-4*t*y - 4*x*z", "4*t*y + 4*x*z",
         "-4*t*x + 4*y*z", "4*x^2 + 4*y^2"}}},
      {"fold", {"t", "-x^2 + y^2 + z^2", {"-2*z", "2*y", "0", "2*x", "0", "0"}}},
      {"cusp", {"t", "x^3 - 3*x*t + y^2 - z^2", {"2*z", "2*y", "0", "3*t - 3*x^2", "0", "0"}}},
      {"birth",
       {"t", "x^3 - 3*x*(t^2 - s) + y^2 - z^2",
        {"2*z", "2*y", "0", "-3*s + 3*t^2 - 3*x^2", "0", "0"}}},
      {"merge",
       {"t", "x^3 - 3*x*(s - t^2) + y^2 - z^2",
        {"2*z", "2*y", "0", "3*s - 3*t^2 - 3*x^2", "0", "0"}}},
      {"flip",
       {"t", "x^4 - x^2*s + x*t + y^2 - z^2",
        {"2*z", "2*y", "0", "2*s*x - t - 4*x^3", "0", "0"}}},
      {"wrinkle",
       {"t^2 - x^2 + y^2 - z^2 + s*t", "2*t*x + 2*y*z",
        {"-2*s*y - 4*t*y - 4*x*z", "2*s*z + 4*t*z - 4*x*y", "4*y^2 + 4*z^2",
         "-2*s*t - 4*t^2 - 4*x^2", "-4*t*z + 4*x*y", "-4*t*y - 4*x*z"}}},
  };
  return g;
}

CasimirPair pair_of(const char* c1, const char* c2) { return {parse(c1), parse(c2)}; }

TEST(FlaschkaRatiu, MatchesSympyGoldens) {
  for (const auto& [name, g] : goldens()) {
    Bivector b = flaschka_ratiu(pair_of(g.c1, g.c2));
    EXPECT_EQ(b, upper(g.pi)) << name;
  }
}

TEST(Gradient, Examples) {
  Covector4 dt = gradient(parse("t"));
  EXPECT_EQ(dt, (Covector4{{Expr(0), Expr(0), Expr(0), Expr(1)}}));
  for (const Expr& e : gradient(Expr(Rational(5, 3))).entries) EXPECT_TRUE(e.is_zero());
  Covector4 dw = gradient(parse("t^2 - x^2 + y^2 - z^2 + s*t"));
  EXPECT_EQ(dw, (Covector4{{parse("-2*x"), parse("2*y"), parse("-2*z"), parse("2*t + s")}}));
}

TEST(FlaschkaRatiu, CuspExample) {
  Bivector b = flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"));
  EXPECT_EQ(b(0, 1), parse("2*z"));
  EXPECT_EQ(b(0, 2), parse("2*y"));
  EXPECT_EQ(b(1, 2), parse("3*t - 3*x^2"));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(b(i, 3).is_zero());
    EXPECT_TRUE(b(3, i).is_zero());
  }
  EXPECT_FALSE(b.conformal().has_value());
  ASSERT_TRUE(b.casimirs().has_value());
}

TEST(FlaschkaRatiu, CoordinatePairGivesDzDt) {
  Bivector b = flaschka_ratiu(pair_of("x", "y"));
  EXPECT_EQ(b, upper({"0", "0", "0", "0", "0", "1"}));
  EXPECT_EQ(b(3, 2), Expr(-1));
}

TEST(FlaschkaRatiu, WrinkleCornerEntry) {
  Bivector b = flaschka_ratiu(pair_of("t^2 - x^2 + y^2 - z^2 + s*t", "2*t*x + 2*y*z"));
  EXPECT_EQ(b(0, 3), parse("4*y^2 + 4*z^2"));
}

TEST(FlaschkaRatiu, ConformalFactor) {
  EXPECT_THROW((void)flaschka_ratiu(pair_of("t", "x"), Expr(0)), std::invalid_argument);

  Diagnostics quiet;
  Bivector b = flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"), kConformal, &quiet);
  EXPECT_TRUE(quiet.warnings.empty());
  EXPECT_EQ(b.scaled(1, 2), kConformal * parse("3*t - 3*x^2"));

  // The grid includes the corners of [-2,2]^4, where x - 2 vanishes.
  Diagnostics loud;
  (void)flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"), parse("x - 2"), &loud);
  EXPECT_FALSE(loud.warnings.empty());
}

TEST(Bivector, RejectsNonAntisymmetric) {
  ExprMatrix4 m;
  m[0][1] = parse("x");
  m[1][0] = parse("x");
  EXPECT_THROW(Bivector{m}, std::invalid_argument);
  ExprMatrix4 d;
  d[2][2] = Expr(1);
  EXPECT_THROW(Bivector{d}, std::invalid_argument);
}

TEST(Jacobiator, Examples) {
  for (const Expr& j : jacobiator(flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2")))) {
    EXPECT_TRUE(j.is_zero());
  }
  for (const Expr& j : jacobiator(upper({"1", "0", "0", "0", "0", "0"}))) {
    EXPECT_TRUE(j.is_zero());
  }
  // Oracle: hand expansion (and sympy) leaves only pi^{yx} d_x pi^{zt} = -1.
  auto j = jacobiator(non_poisson());
  EXPECT_TRUE(j[0].is_zero());
  EXPECT_TRUE(j[1].is_zero());
  EXPECT_TRUE(j[2].is_zero());
  EXPECT_EQ(j[3], Expr(-1));
}

TEST(IsPoisson, Examples) {
  ModelSpec birth = model(ModelName::birth, Rational(1, 2));
  EXPECT_TRUE(is_poisson(flaschka_ratiu(birth.casimirs, kConformal)).poisson);
  EXPECT_TRUE(is_poisson(flaschka_ratiu(model_symbolic(ModelName::birth).casimirs, kConformal))
                  .poisson);
  EXPECT_TRUE(is_poisson(flaschka_ratiu(model(ModelName::flip, 1).casimirs, Expr(1))).poisson);

  PoissonVerdict v = is_poisson(non_poisson());
  EXPECT_FALSE(v.poisson);
  ASSERT_TRUE(v.triple.has_value());
  EXPECT_EQ(triple_name(*v.triple), "(y,z,t)");
  EXPECT_EQ(v.witness, Expr(-1));
}

TEST(IsPoisson, ConformalNonPoissonStaysNonPoisson) {
  EXPECT_FALSE(is_poisson(non_poisson().with_conformal(kConformal)).poisson);
}

TEST(CasimirCheck, Examples) {
  Bivector b = flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"));
  EXPECT_TRUE(casimir_check(b, parse("t")));
  EXPECT_TRUE(casimir_check(b, parse("x^3 - 3*x*t + y^2 - z^2")));
  EXPECT_FALSE(casimir_check(b, parse("x")));
  EXPECT_TRUE(casimir_check(b, parse("(x^3 - 3*x*t + y^2 - z^2)^2 - 5*t^3")));
}

TEST(Rank, Examples) {
  Bivector cusp = flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"));
  EXPECT_EQ(rank_at(cusp, point(1, 0, 0, 1)), 0);
  EXPECT_EQ(rank_at(cusp, point(0, 1, 0, 0)), 2);
  Bivector wrinkle = flaschka_ratiu(model(ModelName::wrinkle, 0).casimirs);
  EXPECT_EQ(rank_at(wrinkle, point(1, 1, 0, 0)), 2);
}

TEST(Rank, FullRankMatrix) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 1) = 1;
  m(1, 0) = -1;
  m(2, 3) = 2;
  m(3, 2) = -2;
  EXPECT_EQ(rank(m), 4);
  EXPECT_EQ(rank(Eigen::Matrix4d::Zero()), 0);
}

TEST(Rank, ConformalZeroWarns) {
  Bivector b = flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"), parse("x - 2"));
  Diagnostics d;
  EXPECT_EQ(rank_at(b, point(2, 1, 0, 0), &d), 0);
  EXPECT_FALSE(d.warnings.empty());
}

TEST(HamiltonianField, Examples) {
  Bivector cusp = flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"));
  EXPECT_EQ(hamiltonian_field(cusp, parse("x")),
            (Vector4{{Expr(0), parse("-2*z"), parse("-2*y"), Expr(0)}}));
  for (const Expr& e : hamiltonian_field(cusp, Expr(4)).entries) EXPECT_TRUE(e.is_zero());
  for (const Expr& e : hamiltonian_field(cusp, parse("x^3 - 3*x*t + y^2 - z^2")).entries) {
    EXPECT_TRUE(e.is_zero());
  }
}

TEST(HamiltonianField, CarriesConformalFactor) {
  Bivector b = flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2"), kConformal);
  EXPECT_EQ(hamiltonian_field(b, parse("x"))[1], kConformal * parse("-2*z"));
}

TEST(LinearPart, Cusp) {
  StructureConstants sc = linear_part(flaschka_ratiu(pair_of("t", "x^3 - 3*x*t + y^2 - z^2")));
  EXPECT_EQ(sc.table[0][1][2], Expr(2));  // {x,y} = 2z
  EXPECT_EQ(sc.table[0][2][1], Expr(2));  // {x,z} = 2y
  EXPECT_EQ(sc.table[1][2][3], Expr(3));  // {y,z} = 3t
  EXPECT_EQ(sc.table[1][0][2], Expr(-2));
  int nonzero = 0;
  for (auto& a : sc.table)
    for (auto& b : a)
      for (auto& c : b) nonzero += c.is_zero() ? 0 : 1;
  EXPECT_EQ(nonzero, 6);
  EXPECT_TRUE(sc.dropped.empty());
}

TEST(LinearPart, WrinkleAtZeroIsTrivial) {
  StructureConstants sc = linear_part(flaschka_ratiu(model(ModelName::wrinkle, 0).casimirs));
  EXPECT_TRUE(sc.is_zero());
  EXPECT_TRUE(sc.dropped.empty());
}

TEST(LinearPart, BirthDropsConstant) {
  StructureConstants sc = linear_part(flaschka_ratiu(model_symbolic(ModelName::birth).casimirs));
  EXPECT_EQ(sc.table[0][1][2], Expr(2));
  EXPECT_EQ(sc.table[0][2][1], Expr(2));
  for (auto& c : sc.table[1][2]) EXPECT_TRUE(c.is_zero());
  ASSERT_EQ(sc.dropped.size(), 1u);
  EXPECT_EQ(sc.dropped[0], "{y,z}: -3*s");
}

TEST(LinearPart, WrinkleKeepsParameterInStructureConstants) {
  StructureConstants sc =
      linear_part(flaschka_ratiu(model_symbolic(ModelName::wrinkle).casimirs));
  EXPECT_EQ(sc.table[0][1][1], parse("-2*s"));  // {x,y} = -2s y + ...
  EXPECT_EQ(sc.table[1][2][3], parse("-2*s"));  // {y,z} = -2s t + ...
}

TEST(LinearPart, RejectsNontrivialConformalFactor) {
  Bivector b = flaschka_ratiu(pair_of("t", "x"), kConformal);
  EXPECT_THROW((void)linear_part(b), std::invalid_argument);
  EXPECT_NO_THROW((void)linear_part(flaschka_ratiu(pair_of("t", "x"), Expr(1))));
}

// Properties over random Casimir pairs.

struct RandomPair {
  CasimirPair cas;
  Expr k;
};

RandomPair random_pair(std::mt19937_64& rng) {
  RandomPair r;
  r.cas = {random_poly(rng, 3, 4, 4), random_poly(rng, 3, 4, 4)};
  // Positive conformal factor: 1 + sum of squares.
  Expr q = random_poly(rng, 1, 3, 3);
  r.k = Expr(1) + q * q + Expr::variable(Var::x) * Expr::variable(Var::x);
  return r;
}

TEST(PoissonProperty, AntisymmetricAndAnnihilatesCasimirs) {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 60; ++n) {
    RandomPair r = random_pair(rng);
    Bivector b = flaschka_ratiu(r.cas);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_TRUE(b(i, i).is_zero());
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(b(i, j), -b(j, i));
    }
    EXPECT_TRUE(casimir_check(b, r.cas.c1));
    EXPECT_TRUE(casimir_check(b, r.cas.c2));
    EXPECT_TRUE(casimir_check(b.with_conformal(r.k), r.cas.c1));
  }
}

TEST(PoissonProperty, JacobiHoldsForAnyConformalFactor) {
  std::mt19937_64 rng(102);
  for (int n = 0; n < 25; ++n) {
    RandomPair r = random_pair(rng);
    EXPECT_TRUE(is_poisson(flaschka_ratiu(r.cas)).poisson);
    EXPECT_TRUE(is_poisson(flaschka_ratiu(r.cas, r.k)).poisson);
  }
}

TEST(PoissonProperty, SymbolicAgreesWithNumericDeterminant) {
  std::mt19937_64 rng(103);
  for (int n = 0; n < 40; ++n) {
    RandomPair r = random_pair(rng);
    Bivector b = flaschka_ratiu(r.cas);
    Covector4 d1 = gradient(r.cas.c1);
    Covector4 d2 = gradient(r.cas.c2);
    for (int m = 0; m < 5; ++m) {
      Point4 p = random_point(rng);
      NumCovector4 g1 = evaluate(d1, p);
      NumCovector4 g2 = evaluate(d2, p);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
          a(static_cast<Eigen::Index>(i), 0) = 1;
          a(static_cast<Eigen::Index>(j), 1) = 1;
          for (std::size_t r2 = 0; r2 < 4; ++r2) {
            a(static_cast<Eigen::Index>(r2), 2) = g1[r2];
            a(static_cast<Eigen::Index>(r2), 3) = g2[r2];
          }
          const double want = a.determinant();
          const double got = evaluate(b(i, j), p);
          EXPECT_NEAR(got, want, 1e-9 * (1.0 + std::abs(want)));
        }
      }
    }
  }
}

TEST(PoissonProperty, RankNeverFourAndInvariantUnderConformalFactor) {
  std::mt19937_64 rng(104);
  for (int n = 0; n < 40; ++n) {
    RandomPair r = random_pair(rng);
    Bivector b = flaschka_ratiu(r.cas);
    Bivector bk = flaschka_ratiu(r.cas, r.k);
    for (int m = 0; m < 10; ++m) {
      Point4 p = random_point(rng);
      const int plain = rank_at(b, p);
      EXPECT_NE(plain, 4);
      EXPECT_EQ(rank_at(bk, p), plain);
    }
  }
}

TEST(PoissonProperty, HamiltonianFieldIsBracket) {
  std::mt19937_64 rng(105);
  for (int n = 0; n < 30; ++n) {
    RandomPair r = random_pair(rng);
    Bivector b = flaschka_ratiu(r.cas, r.k);
    Expr h = random_poly(rng, 3, 5);
    Vector4 field = hamiltonian_field(b, h);
    Point4 p = random_point(rng);
    Eigen::Matrix4d m = b.evaluate(p);
    NumCovector4 dh = evaluate(gradient(h), p);
    for (std::size_t i = 0; i < 4; ++i) {
      double want = 0.0;
      for (std::size_t j = 0; j < 4; ++j) {
        want += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * dh[j];
      }
      EXPECT_NEAR(evaluate(field[i], p), want, 1e-9 * (1.0 + std::abs(want)));
    }
  }
}

}  // namespace
}  // namespace wfp
