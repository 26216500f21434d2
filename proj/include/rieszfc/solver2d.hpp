#pragma once

#include "rieszfc/analytic.hpp"
#include "rieszfc/common.hpp"
#include "rieszfc/fractional_order.hpp"
#include "rieszfc/grid.hpp"
#include "rieszfc/operators.hpp"
#include "rieszfc/solver1d.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace rieszfc {

// u_t = -u + K (D_x^alpha u + D_y^beta u) + f on (0,La) x (0,Lb) x (0,T].
template <typename Scalar = double>
struct Problem2D {
  Scalar K;
  FractionalOrder<Scalar> alpha;
  FractionalOrder<Scalar> beta;
  Scalar La = 1;
  Scalar Lb = 1;
  Scalar T = 1;
  std::function<Scalar(Scalar, Scalar, Scalar)> f;
  std::function<Scalar(Scalar, Scalar)> u0;
  std::function<Scalar(Scalar, Scalar, Scalar)> exact;
};

// values(i, j) sits at (x_i, y_j).
template <typename Scalar = double>
struct Field2D {
  Grid1D<Scalar> gx;
  Grid1D<Scalar> gy;
  Matrix<Scalar> values;

  Field2D(const Grid1D<Scalar>& x, const Grid1D<Scalar>& y)
      : gx(x), gy(y), values(Matrix<Scalar>::Zero(x.M() + 1, y.M() + 1)) {}

  // Interior values with x fastest.
  Vector<Scalar> interior() const {
    const Index nx = gx.M() - 1, ny = gy.M() - 1;
    Matrix<Scalar> block = values.block(1, 1, nx, ny);
    return Eigen::Map<const Vector<Scalar>>(block.data(), nx * ny);
  }
};

template <typename Scalar = double>
struct Scheme2D {
  Grid1D<Scalar> gx;
  Grid1D<Scalar> gy;
  Index N = 0;
  Scalar tau = 0;
  Operators2D<Scalar> ops;
  Matrix<Scalar> A_plus;
  Matrix<Scalar> A_minus;
  Eigen::LLT<Matrix<Scalar>> factor;

  Scalar final_time() const { return Scalar(N) * tau; }
};

template <typename Scalar = double>
struct Run2D {
  Field2D<Scalar> solution;
  Scalar time = 0;
  std::vector<Vector<Scalar>> history;
};

template <typename Scalar>
Scheme2D<Scalar> assemble2d_step(const Problem2D<Scalar>& pb, Index Ma, Index Mb, Scalar tau, Index N) {
  require(pb.K > Scalar(0), "diffusion coefficient K must be positive");
  require(pb.T > Scalar(0), "final time must be positive");
  require(static_cast<bool>(pb.f) && static_cast<bool>(pb.u0), "problem needs source and initial data");
  require(N >= 1, "N must be at least 1");
  require(tau > Scalar(0), "time step must be positive");
  Scheme2D<Scalar> s{Grid1D<Scalar>(Scalar(0), pb.La, Ma),
                     Grid1D<Scalar>(Scalar(0), pb.Lb, Mb),
                     N,
                     tau,
                     build_2d<Scalar>(pb.alpha, pb.beta, Ma, Mb, pb.La, pb.Lb, pb.K, pb.K),
                     {},
                     {},
                     {}};
  s.A_plus = (Scalar(1) + tau / 2) * s.ops.T - (tau / 2) * s.ops.S;
  s.A_minus = (Scalar(1) - tau / 2) * s.ops.T + (tau / 2) * s.ops.S;
  s.factor.compute(s.A_plus);
  if (s.factor.info() != Eigen::Success) throw NumericalFailure("implicit matrix is not positive definite");
  return s;
}

template <typename Scalar>
Scheme2D<Scalar> assemble2d(const Problem2D<Scalar>& pb, Index Ma, Index Mb, Index N) {
  require(N >= 1, "N must be at least 1");
  return assemble2d_step(pb, Ma, Mb, pb.T / Scalar(N), N);
}

template <typename Scalar>
Run2D<Scalar> run2d(const Scheme2D<Scalar>& s, const Problem2D<Scalar>& pb, bool keep_history = false) {
  const Index nx = s.gx.M() - 1, ny = s.gy.M() - 1;
  Vector<Scalar> U(nx * ny), F(nx * ny);
  for (Index j = 1; j <= ny; ++j)
    for (Index i = 1; i <= nx; ++i) U((j - 1) * nx + (i - 1)) = pb.u0(s.gx.node(i), s.gy.node(j));
  Run2D<Scalar> out{Field2D<Scalar>(s.gx, s.gy), Scalar(0), {}};
  if (keep_history) out.history.push_back(U);
  for (Index k = 0; k < s.N; ++k) {
    const Scalar th = (Scalar(k) + Scalar(0.5)) * s.tau;
    for (Index j = 1; j <= ny; ++j)
      for (Index i = 1; i <= nx; ++i) F((j - 1) * nx + (i - 1)) = pb.f(s.gx.node(i), s.gy.node(j), th);
    const Vector<Scalar> rhs = s.A_minus * U + s.tau * (s.ops.T * F);
    U = s.factor.solve(rhs);
    if (!U.allFinite()) throw NumericalFailure("non-finite value during time stepping");
    if (keep_history) out.history.push_back(U);
  }
  out.solution.values.block(1, 1, nx, ny) = Eigen::Map<const Matrix<Scalar>>(U.data(), nx, ny);
  out.time = s.final_time();
  return out;
}

template <typename Scalar>
Scalar compact_energy(const Scheme2D<Scalar>& s, const Vector<Scalar>& U) {
  return s.gx.h() * s.gy.h() * U.dot(s.ops.T * U);
}

template <typename Scalar>
ErrorNorms<Scalar> error_norms(const Field2D<Scalar>& numeric, const Field2D<Scalar>& exact) {
  require(numeric.gx == exact.gx && numeric.gy == exact.gy, "error_norms: grids differ");
  const Vector<Scalar> e = numeric.interior() - exact.interior();
  using std::sqrt;
  return {e.cwiseAbs().maxCoeff(), sqrt(numeric.gx.h() * numeric.gy.h() * e.squaredNorm())};
}

template <typename Scalar, typename F>
Field2D<Scalar> sample_2d(const Grid1D<Scalar>& gx, const Grid1D<Scalar>& gy, F&& f) {
  Field2D<Scalar> out(gx, gy);
  for (Index j = 0; j <= gy.M(); ++j)
    for (Index i = 0; i <= gx.M(); ++i) out.values(i, j) = f(gx.node(i), gy.node(j));
  return out;
}

// u = e^{2t} x^6 (1-x)^6 y^6 (1-y)^6, K = pi^{-8}, on the unit square.
template <typename Scalar = double>
Problem2D<Scalar> example3_problem(Scalar alpha, Scalar beta) {
  const FractionalOrder<Scalar> oa(alpha), ob(beta);
  using std::pow;
  const Scalar K = pow(std::numbers::pi_v<Scalar>, Scalar(-8));
  const PolySpec<Scalar> g = bump_poly<Scalar>(6);
  Problem2D<Scalar> pb{K, oa, ob, Scalar(1), Scalar(1), Scalar(1), {}, {}, {}};
  pb.f = [g, oa, ob, K](Scalar x, Scalar y, Scalar t) {
    using std::exp;
    const Scalar gx = g.value(x), gy = g.value(y);
    return exp(2 * t) *
           (Scalar(3) * gx * gy - K * (gy * riesz_poly<Scalar>(g, oa, x) + gx * riesz_poly<Scalar>(g, ob, y)));
  };
  pb.u0 = [g](Scalar x, Scalar y) { return g.value(x) * g.value(y); };
  pb.exact = [g](Scalar x, Scalar y, Scalar t) {
    using std::exp;
    return exp(2 * t) * g.value(x) * g.value(y);
  };
  return pb;
}

}  // namespace rieszfc
