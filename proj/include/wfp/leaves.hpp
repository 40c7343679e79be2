#pragma once

// Numeric geometry of the 2-dimensional symplectic leaves: tangent frames,
// the anchor equation B_p(alpha) = u, the leaf form, and Hamiltonian flow.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wfp/expr.hpp"
#include "wfp/poisson.hpp"

namespace wfp {

class SingularPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested coordinate pair does not project the leaf tangent plane
// isomorphically at the point.
class DegenerateChart : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kAnchorResidual = 1e-9;

struct LeafFrame {
  Point4 base;
  NumVector4 u, v;  // orthonormal, det(u, v, dC1, dC2) > 0
  NumCovector4 alpha, beta;
};

LeafFrame leaf_tangent_frame(const Bivector& b, const Point4& p);

// Least-squares solution of B_p alpha = u; throws NotInImage when the
// residual exceeds kAnchorResidual * max(1, |u|).
NumCovector4 solve_anchor(const Bivector& b, const Point4& p, const NumVector4& u);

struct LeafForm {
  double coefficient = 0.0;  // omega(u, v) = <alpha, v>
  double dual = 0.0;         // -<beta, u>
  bool consistent = false;   // |coefficient - dual| within 1e-9 (relative above 1)
  NumVector4 u, v;
  NumCovector4 alpha, beta;
};

// Coefficient of the leaf form against the Euclidean area form, read off in
// the orthonormal oriented frame.
LeafForm leaf_form_coefficient(const Bivector& b, const Point4& p);

// Coefficient against the projected coordinate area form da ^ db: u and v
// are the leaf-tangent lifts of d/da and d/db.
LeafForm leaf_form_coefficient(const Bivector& b, const Point4& p, std::pair<Var, Var> chart);

// Coordinate pair with the largest |pi^{ab}(p)|.
std::pair<Var, Var> best_chart(const Bivector& b, const Point4& p);

struct Trajectory {
  std::vector<Point4> points;
  double dt = 0.0;
  std::vector<std::array<double, 3>> conserved;  // C1, C2, h per point
  std::array<double, 3> drift{};                 // max |value - initial value|
};

// Classical RK4 on X_h. The bivector must carry its Casimir pair.
Trajectory flow(const Bivector& b, const Expr& h, const Point4& p0, double dt, int steps);

// Header step,x,y,z,t,C1,C2,H; 17 significant digits; LF line endings.
std::string to_csv(const Trajectory& trajectory);

}  // namespace wfp
