#include "wfp/leaves.hpp"

#include <cmath>
#include <cstdio>

namespace wfp {

namespace {

Eigen::Vector4d to_eigen(const Tuple4<Contravariant, double>& v) {
  return Eigen::Vector4d(v[0], v[1], v[2], v[3]);
}

template <class Tag>
Tuple4<Tag, double> from_eigen(const Eigen::Vector4d& v) {
  Tuple4<Tag, double> out;
  for (std::size_t i = 0; i < kNumCoords; ++i) out[i] = v(static_cast<Eigen::Index>(i));
  return out;
}

std::string describe(const Point4& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", p.coords[0], p.coords[1],
                p.coords[2], p.coords[3]);
  return buf;
}

// Orthonormal basis of the image of B_p, before orientation.
std::pair<Eigen::Vector4d, Eigen::Vector4d> image_basis(const Eigen::Matrix4d& m,
                                                        const Point4& p) {
  const int r = rank(m);
  if (r < 2) throw SingularPoint("rank " + std::to_string(r) + " at " + describe(p));
  if (r > 2) {
    throw std::invalid_argument("rank " + std::to_string(r) + " at " + describe(p) +
                                ": the leaf is not 2-dimensional");
  }
  double best = -1.0;
  Eigen::Index first = 0;
  Eigen::Index second = 1;
  for (Eigen::Index a = 0; a < 4; ++a) {
    for (Eigen::Index b = a + 1; b < 4; ++b) {
      const double gram = m.col(a).squaredNorm() * m.col(b).squaredNorm() -
                          std::pow(m.col(a).dot(m.col(b)), 2);
      if (gram > best) {
        best = gram;
        first = a;
        second = b;
      }
    }
  }
  const Eigen::Vector4d u = m.col(first).normalized();
  const Eigen::Vector4d w = m.col(second) - u.dot(m.col(second)) * u;
  return {u, w.normalized()};
}

double orientation(const Bivector& b, const Point4& p, const Eigen::Vector4d& u,
                   const Eigen::Vector4d& v) {
  if (const auto& cas = b.casimirs()) {
    const NumCovector4 d1 = evaluate(gradient(cas->c1), p);
    const NumCovector4 d2 = evaluate(gradient(cas->c2), p);
    Eigen::Matrix4d m;
    m.col(0) = u;
    m.col(1) = v;
    for (std::size_t i = 0; i < kNumCoords; ++i) {
      m(static_cast<Eigen::Index>(i), 2) = d1[i];
      m(static_cast<Eigen::Index>(i), 3) = d2[i];
    }
    return m.determinant();
  }
  return u.dot(b.with_conformal(std::nullopt).evaluate(p) * v);
}

bool agree(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

}  // namespace

NumCovector4 solve_anchor(const Bivector& b, const Point4& p, const NumVector4& u) {
  const Eigen::Matrix4d m = b.evaluate(p);
  const Eigen::Vector4d rhs = to_eigen(u);
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double threshold = kRankRelativeThreshold * std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::Vector4d alpha = Eigen::Vector4d::Zero();
  for (Eigen::Index i = 0; i < 4; ++i) {
    const double sigma = svd.singularValues()(i);
    if (sigma <= threshold) continue;
    alpha += (svd.matrixU().col(i).dot(rhs) / sigma) * svd.matrixV().col(i);
  }
  const double residual = (m * alpha - rhs).norm();
  if (!(residual <= kAnchorResidual * std::max(1.0, rhs.norm()))) {
    throw NotInImage("vector is not in the image of B at " + describe(p) +
                     " (residual " + std::to_string(residual) + ")");
  }
  return from_eigen<Covariant>(alpha);
}

LeafFrame leaf_tangent_frame(const Bivector& b, const Point4& p) {
  auto [u, v] = image_basis(b.evaluate(p), p);
  if (orientation(b, p, u, v) < 0) v = -v;
  LeafFrame frame;
  frame.base = p;
  frame.u = from_eigen<Contravariant>(u);
  frame.v = from_eigen<Contravariant>(v);
  frame.alpha = solve_anchor(b, p, frame.u);
  frame.beta = solve_anchor(b, p, frame.v);
  return frame;
}

namespace {

LeafForm pair_up(const Bivector& b, const Point4& p, const NumVector4& u, const NumVector4& v) {
  LeafForm form;
  form.u = u;
  form.v = v;
  form.alpha = solve_anchor(b, p, u);
  form.beta = solve_anchor(b, p, v);
  form.coefficient = pairing(form.alpha, v);
  form.dual = -pairing(form.beta, u);
  form.consistent = agree(form.coefficient, form.dual);
  return form;
}

}  // namespace

LeafForm leaf_form_coefficient(const Bivector& b, const Point4& p) {
  const LeafFrame frame = leaf_tangent_frame(b, p);
  return pair_up(b, p, frame.u, frame.v);
}

LeafForm leaf_form_coefficient(const Bivector& b, const Point4& p, std::pair<Var, Var> chart) {
  const LeafFrame frame = leaf_tangent_frame(b, p);
  const auto a = index(chart.first);
  const auto c = index(chart.second);
  if (a == c) throw std::invalid_argument("chart coordinates must differ");
  Eigen::Matrix2d projection;
  projection << frame.u[a], frame.v[a], frame.u[c], frame.v[c];
  if (std::abs(projection.determinant()) < 1e-12) {
    throw DegenerateChart(std::string("coordinates (") + var_name(chart.first) + "," +
                          var_name(chart.second) + ") do not parametrize the leaf at " +
                          describe(p));
  }
  const Eigen::Matrix2d inverse = projection.inverse();
  auto lift = [&](Eigen::Index column) {
    const Eigen::Vector4d w =
        inverse(0, column) * to_eigen(frame.u) + inverse(1, column) * to_eigen(frame.v);
    return from_eigen<Contravariant>(w);
  };
  return pair_up(b, p, lift(0), lift(1));
}

std::pair<Var, Var> best_chart(const Bivector& b, const Point4& p) {
  const Eigen::Matrix4d m = b.evaluate(p);
  std::pair<Var, Var> best{Var::x, Var::y};
  double largest = -1.0;
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = i + 1; j < kNumCoords; ++j) {
      const double value = std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      if (value > largest) {
        largest = value;
        best = {kCoords[i], kCoords[j]};
      }
    }
  }
  return best;
}

Trajectory flow(const Bivector& b, const Expr& h, const Point4& p0, double dt, int steps) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be >= 0");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!b.casimirs()) {
    throw std::invalid_argument("flow needs a bivector built from a Casimir pair");
  }
  const CasimirPair& cas = *b.casimirs();
  const Vector4 field = hamiltonian_field(b, h);

  auto rate = [&](const Point4& q) {
    Eigen::Vector4d out;
    for (std::size_t i = 0; i < kNumCoords; ++i) {
      out(static_cast<Eigen::Index>(i)) = evaluate(field[i], q);
    }
    return out;
  };
  auto shifted = [](const Point4& q, const Eigen::Vector4d& delta) {
    Point4 out = q;
    for (std::size_t i = 0; i < kNumCoords; ++i) out.coords[i] += delta(static_cast<Eigen::Index>(i));
    return out;
  };
  auto record = [&](Trajectory& tr, const Point4& q) {
    for (double c : q.coords) {
      if (!std::isfinite(c)) {
        throw NonFinite("trajectory left double range after step " +
                        std::to_string(tr.points.size() - 1));
      }
    }
    tr.points.push_back(q);
    tr.conserved.push_back({evaluate(cas.c1, q), evaluate(cas.c2, q), evaluate(h, q)});
    const auto& first = tr.conserved.front();
    const auto& last = tr.conserved.back();
    for (std::size_t n = 0; n < 3; ++n) {
      tr.drift[n] = std::max(tr.drift[n], std::abs(last[n] - first[n]));
    }
  };

  Trajectory tr;
  tr.dt = dt;
  tr.points.reserve(static_cast<std::size_t>(steps) + 1);
  tr.conserved.reserve(static_cast<std::size_t>(steps) + 1);
  record(tr, p0);
  Point4 q = p0;
  for (int n = 0; n < steps; ++n) {
    const Eigen::Vector4d k1 = rate(q);
    const Eigen::Vector4d k2 = rate(shifted(q, 0.5 * dt * k1));
    const Eigen::Vector4d k3 = rate(shifted(q, 0.5 * dt * k2));
    const Eigen::Vector4d k4 = rate(shifted(q, dt * k3));
    q = shifted(q, (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    record(tr, q);
  }
  return tr;
}

std::string to_csv(const Trajectory& trajectory) {
  std::string out = "step,x,y,z,t,C1,C2,H\n";
  char buf[64];
  for (std::size_t n = 0; n < trajectory.points.size(); ++n) {
    out += std::to_string(n);
    const auto& p = trajectory.points[n];
    const auto& c = trajectory.conserved[n];
    for (double value : {p.coords[0], p.coords[1], p.coords[2], p.coords[3], c[0], c[1], c[2]}) {
      std::snprintf(buf, sizeof buf, ",%.17g", value);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace wfp
