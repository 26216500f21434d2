#pragma once

#include "rieszfc/analytic.hpp"
#include "rieszfc/common.hpp"
#include "rieszfc/fractional_order.hpp"
#include "rieszfc/grid.hpp"
#include "rieszfc/operators.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <functional>
#include <vector>

namespace rieszfc {

// u_t = -u + K D^alpha u + f on (0, L) x (0, T], u = 0 at x = 0, L.
template <typename Scalar = double>
struct Problem1D {
  Scalar K;
  FractionalOrder<Scalar> order;
  Scalar L = 1;
  Scalar T = 1;
  std::function<Scalar(Scalar, Scalar)> f;
  std::function<Scalar(Scalar)> u0;
  std::function<Scalar(Scalar, Scalar)> exact;
};

template <typename Scalar = double>
struct Scheme1D {
  Grid1D<Scalar> grid;
  Index N = 0;
  Scalar tau = 0;
  OperatorMatrices<Scalar> ops;
  Matrix<Scalar> A_plus;
  Matrix<Scalar> A_minus;
  Eigen::LLT<Matrix<Scalar>> factor;

  Scalar final_time() const { return Scalar(N) * tau; }
};

template <typename Scalar = double>
struct Run1D {
  Field1D<Scalar> solution;
  Scalar time = 0;
  std::vector<Vector<Scalar>> history;  // interior values, one per time level
};

namespace detail {

template <typename Scalar>
void check_problem(const Problem1D<Scalar>& pb) {
  require(pb.K > Scalar(0), "diffusion coefficient K must be positive");
  require(pb.L > Scalar(0), "domain length must be positive");
  require(pb.T > Scalar(0), "final time must be positive");
  require(static_cast<bool>(pb.f) && static_cast<bool>(pb.u0), "problem needs source and initial data");
}

}  // namespace detail

// Crank-Nicolson compact scheme with a fixed step tau; N steps reach N tau.
template <typename Scalar>
Scheme1D<Scalar> assemble1d_step(const Problem1D<Scalar>& pb, Index M, Scalar tau, Index N) {
  detail::check_problem(pb);
  require(M >= 4, "M must be at least 4");
  require(N >= 1, "N must be at least 1");
  require(tau > Scalar(0), "time step must be positive");
  check_dense_cap(M - 1);
  Scheme1D<Scalar> s{Grid1D<Scalar>(Scalar(0), pb.L, M), N, tau, build_matrices<Scalar>(pb.order, M), {}, {}, {}};
  using std::pow;
  const Scalar g = tau * pb.K / (Scalar(2) * pow(s.grid.h(), pb.order.alpha()));
  s.A_plus = (Scalar(1) + tau / 2) * s.ops.C - g * s.ops.D;
  s.A_minus = (Scalar(1) - tau / 2) * s.ops.C + g * s.ops.D;
  s.factor.compute(s.A_plus);
  if (s.factor.info() != Eigen::Success) throw NumericalFailure("implicit matrix is not positive definite");
  return s;
}

template <typename Scalar>
Scheme1D<Scalar> assemble1d(const Problem1D<Scalar>& pb, Index M, Index N) {
  require(N >= 1, "N must be at least 1");
  return assemble1d_step(pb, M, pb.T / Scalar(N), N);
}

// Largest N with N tau <= T.
template <typename Scalar>
Index steps_for(Scalar T, Scalar tau) {
  require(tau > Scalar(0), "time step must be positive");
  using std::floor;
  return static_cast<Index>(floor(T / tau + Scalar(1e-9)));
}

template <typename Scalar>
Vector<Scalar> sample_interior(const Grid1D<Scalar>& g, const std::function<Scalar(Scalar)>& f) {
  Vector<Scalar> v(g.M() - 1);
  for (Index j = 1; j < g.M(); ++j) v(j - 1) = f(g.node(j));
  return v;
}

template <typename Scalar>
Run1D<Scalar> run1d(const Scheme1D<Scalar>& s, const Problem1D<Scalar>& pb, bool keep_history = false) {
  const Index n = s.grid.M() - 1;
  Vector<Scalar> U = sample_interior<Scalar>(s.grid, pb.u0);
  Run1D<Scalar> out{Field1D<Scalar>(s.grid), Scalar(0), {}};
  if (keep_history) out.history.push_back(U);
  Vector<Scalar> F(n);
  for (Index k = 0; k < s.N; ++k) {
    const Scalar th = (Scalar(k) + Scalar(0.5)) * s.tau;
    for (Index j = 1; j <= n; ++j) F(j - 1) = pb.f(s.grid.node(j), th);
    const Vector<Scalar> rhs = s.A_minus * U + s.tau * (s.ops.C * F);
    U = s.factor.solve(rhs);
    if (!U.allFinite()) throw NumericalFailure("non-finite value during time stepping");
    if (keep_history) out.history.push_back(U);
  }
  out.solution.values.segment(1, n) = U;
  out.time = s.final_time();
  return out;
}

// h (C U, U), non-increasing along the unforced scheme.
template <typename Scalar>
Scalar compact_energy(const Scheme1D<Scalar>& s, const Vector<Scalar>& U) {
  return s.grid.h() * U.dot(s.ops.C * U);
}

template <typename Scalar = double>
struct ErrorNorms {
  Scalar max_abs = 0;
  Scalar l2 = 0;
};

template <typename Scalar>
ErrorNorms<Scalar> error_norms(const Vector<Scalar>& numeric, const Vector<Scalar>& exact, Scalar h) {
  require(numeric.size() == exact.size(), "error_norms: length mismatch");
  require(h > Scalar(0), "error_norms: h must be positive");
  const Vector<Scalar> e = numeric - exact;
  using std::sqrt;
  return {e.size() ? e.cwiseAbs().maxCoeff() : Scalar(0), sqrt(h * e.squaredNorm())};
}

template <typename Scalar>
ErrorNorms<Scalar> error_norms(const Field1D<Scalar>& numeric, const Field1D<Scalar>& exact) {
  require(numeric.grid == exact.grid, "error_norms: grids differ");
  return error_norms<Scalar>(numeric.interior(), exact.interior(), numeric.grid.h());
}

// u = e^t x^6 (1-x)^6, K = e^{-12}, on (0,1) x (0,1].
template <typename Scalar = double>
Problem1D<Scalar> example2_problem(Scalar alpha) {
  const FractionalOrder<Scalar> order(alpha);
  using std::exp;
  const Scalar K = exp(Scalar(-12));
  const PolySpec<Scalar> g = bump_poly<Scalar>(6);
  Problem1D<Scalar> pb{K, order, Scalar(1), Scalar(1), {}, {}, {}};
  pb.f = [g, order, K](Scalar x, Scalar t) {
    using std::exp;
    return exp(t) * (Scalar(2) * g.value(x) - K * riesz_poly<Scalar>(g, order, x));
  };
  pb.u0 = [g](Scalar x) { return g.value(x); };
  pb.exact = [g](Scalar x, Scalar t) {
    using std::exp;
    return exp(t) * g.value(x);
  };
  return pb;
}

}  // namespace rieszfc
