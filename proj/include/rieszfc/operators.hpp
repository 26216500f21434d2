#pragma once

#include "rieszfc/coefficients.hpp"
#include "rieszfc/common.hpp"
#include "rieszfc/fractional_order.hpp"
#include "rieszfc/grid.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <optional>
#include <utility>

namespace rieszfc {

// Which coefficient family builds the left/right sums. The sums at x are
//   L u(x) = sum_l mu_l u(x - (l+s) h),  R u(x) = sum_l mu_l u(x + (l+s) h)
// with s = -1 for kappa and s = +1 for kappa tilde.
template <typename Scalar = double>
struct RieszFamily {
  Family family = Family::kappa2;
  int p = 2;
  Scalar s = -1;

  static RieszFamily kappa() { return {Family::kappa2, 2, Scalar(-1)}; }
  static RieszFamily kappa_tilde() { return {Family::kappa2_tilde, 2, Scalar(1)}; }
  static RieszFamily generalized(int p, Scalar s) { return {Family::mu, p, s}; }

  // Grid application needs the shifted arguments to land on nodes.
  Index integer_shift() const {
    using std::round;
    const Scalar r = round(s);
    require(r == s, "grid application needs an integer shift s");
    return static_cast<Index>(r);
  }

  CoefficientTable<Scalar> table(const FractionalOrder<Scalar>& order, Index n) const {
    return coefficient_table<Scalar>(family, order, s, p, n);
  }
};

// Coefficients needed by riesz_apply on a grid with M intervals.
template <typename Scalar>
Index riesz_table_length(Index M, const RieszFamily<Scalar>& fam) {
  return std::max<Index>(1, M - fam.integer_shift());
}

// prefactor (L + R) u / h^alpha at every interior node, u zero-extended.
template <typename Scalar>
Field1D<Scalar> riesz_apply(const Field1D<Scalar>& u, const FractionalOrder<Scalar>& order,
                            const RieszFamily<Scalar>& fam, const CoefficientTable<Scalar>& table) {
  require(u.homogeneous(), "riesz_apply: field must vanish at both boundary nodes");
  const Index M = u.grid.M();
  const Index sh = fam.integer_shift();
  require(table.size() >= riesz_table_length(M, fam), "riesz_apply: coefficient table too short");
  using std::pow;
  const Scalar scale = order.prefactor() / pow(u.grid.h(), order.alpha());
  Field1D<Scalar> out(u.grid);
  for (Index j = 1; j < M; ++j) {
    Scalar acc(0);
    for (Index l = std::max<Index>(0, j - sh - M); l <= j - sh && l < table.size(); ++l) acc += table[l] * u.values(j - l - sh);
    for (Index l = std::max<Index>(0, -sh - j); j + l + sh <= M && l < table.size(); ++l) acc += table[l] * u.values(j + l + sh);
    out.values(j) = scale * acc;
  }
  return out;
}

template <typename Scalar>
Field1D<Scalar> riesz_apply(const Field1D<Scalar>& u, const FractionalOrder<Scalar>& order,
                            const RieszFamily<Scalar>& fam) {
  return riesz_apply(u, order, fam, fam.table(order, riesz_table_length(u.grid.M(), fam)));
}

// Compact operator a0 + a1 h^q delta^q, q = diff_order.
template <typename Scalar = double>
struct CompactSpec {
  Scalar a0 = 1;
  Scalar a1 = 0;
  int diff_order = 2;
};

template <typename Scalar>
CompactSpec<Scalar> compact_J(const FractionalOrder<Scalar>& order, int p, Scalar s) {
  require(p >= 2, "compact_J: p >= 2");
  const auto e = expansion_coefficients<Scalar>(order, s, p, p);
  return {Scalar(1), e.rho(p), p};
}

template <typename Scalar>
CompactSpec<Scalar> compact_L(const FractionalOrder<Scalar>& order) {
  return compact_J<Scalar>(order, 2, Scalar(-1));
}

template <typename Scalar>
CompactSpec<Scalar> compact_L_tilde(const FractionalOrder<Scalar>& order) {
  return compact_J<Scalar>(order, 2, Scalar(1));
}

// Combination of two shifts that cancels the h^{p+1} term.
template <typename Scalar>
CompactSpec<Scalar> compact_H(const FractionalOrder<Scalar>& order, int p, Scalar s1, Scalar s2) {
  require(p >= 2, "compact_H: p >= 2");
  const auto e1 = expansion_coefficients<Scalar>(order, s1, p, p + 1);
  const auto e2 = expansion_coefficients<Scalar>(order, s2, p, p + 1);
  CompactSpec<Scalar> c;
  c.a0 = e2.rho(p + 1) - e1.rho(p + 1);
  c.a1 = e1.rho(p) * e2.rho(p + 1) - e2.rho(p) * e1.rho(p + 1);
  c.diff_order = p;
  using std::abs;
  require(abs(c.a0) > Scalar(1e-14), "compact_H: shifts give a degenerate combination");
  return c;
}

// a0 u_j + a1 (u_{j+1} - 2 u_j + u_{j-1}) at interior nodes, a0 u at the ends.
template <typename Scalar>
Field1D<Scalar> compact_apply(const Field1D<Scalar>& u, const CompactSpec<Scalar>& spec) {
  require(spec.diff_order == 2, "compact_apply on a grid supports the second difference only");
  const Index M = u.grid.M();
  Field1D<Scalar> out(u.grid);
  out.values(0) = spec.a0 * u.values(0);
  out.values(M) = spec.a0 * u.values(M);
  for (Index j = 1; j < M; ++j)
    out.values(j) = spec.a0 * u.values(j) + spec.a1 * (u.values(j + 1) - 2 * u.values(j) + u.values(j - 1));
  return out;
}

// delta^p f(x) = h^{-p} sum_m (-1)^m C(p,m) f(x + (p/2 - m) h)
template <typename Scalar, typename F>
Scalar central_difference_p(F&& f, int p, Scalar x, Scalar h) {
  require(p >= 1, "central_difference_p: p >= 1");
  require(h > Scalar(0), "central_difference_p: h > 0");
  Scalar acc(0), binom(1);
  for (int m = 0; m <= p; ++m) {
    const Scalar arg = x + (Scalar(p) / 2 - Scalar(m)) * h;
    acc += ((m % 2 == 0) ? binom : -binom) * f(arg);
    binom = binom * Scalar(p - m) / Scalar(m + 1);
  }
  using std::pow;
  return acc / pow(h, p);
}

// Compact operator applied to an evaluable function at x.
template <typename Scalar, typename F>
Scalar compact_apply_at(F&& f, const CompactSpec<Scalar>& spec, Scalar x, Scalar h) {
  using std::pow;
  return spec.a0 * f(x) + spec.a1 * pow(h, spec.diff_order) * central_difference_p<Scalar>(f, spec.diff_order, x, h);
}

// prefactor (L B_{p,s} + R B_{p,s}) f(x) / h^alpha for f supported on [a,b].
template <typename Scalar, typename F>
Scalar shifted_riesz(int p, Scalar s, const FractionalOrder<Scalar>& order, F&& f, Scalar a, Scalar b, Scalar x,
                     Scalar h) {
  require(b > a, "shifted_riesz: need a < b");
  require(h > Scalar(0), "shifted_riesz: need h > 0");
  using std::floor;
  using std::pow;
  const Scalar slack = Scalar(1e-12) * (b - a);
  const Scalar reach = std::max((x - a) / h, (b - x) / h) - s;
  if (reach < Scalar(-1e-9)) return Scalar(0);
  const Index n = static_cast<Index>(floor(reach + Scalar(1e-9))) + 1;
  const auto table = coefficient_table<Scalar>(Family::mu, order, s, p, n);
  auto eval = [&](Scalar y) -> Scalar {
    if (y < a - slack || y > b + slack) return Scalar(0);
    return f(std::min(std::max(y, a), b));
  };
  Scalar acc(0);
  for (Index l = 0; l < n; ++l) {
    const Scalar off = (Scalar(l) + s) * h;
    acc += table[l] * (eval(x - off) + eval(x + off));
  }
  return order.prefactor() * acc / pow(h, order.alpha());
}

// Formulas that pair a coefficient family with its compact operator.
template <typename Scalar = double>
struct CompactFormula {
  enum class Kind { f7, f8, f9 };
  Kind kind = Kind::f7;
  Scalar s1 = -1;
  Scalar s2 = 1;

  static CompactFormula f7() { return {Kind::f7, Scalar(-1), Scalar(1)}; }
  static CompactFormula f8() { return {Kind::f8, Scalar(-1), Scalar(1)}; }
  static CompactFormula f9(Scalar s1, Scalar s2) { return {Kind::f9, s1, s2}; }

  CompactSpec<Scalar> spec(const FractionalOrder<Scalar>& order) const {
    switch (kind) {
      case Kind::f7: return compact_L<Scalar>(order);
      case Kind::f8: return compact_L_tilde<Scalar>(order);
      case Kind::f9: return compact_H<Scalar>(order, 2, s1, s2);
    }
    return {};
  }
};

// Right-hand side of the compact system at every interior node.
template <typename Scalar>
Field1D<Scalar> compact_rhs(const Field1D<Scalar>& u, const FractionalOrder<Scalar>& order,
                            const CompactFormula<Scalar>& formula) {
  switch (formula.kind) {
    case CompactFormula<Scalar>::Kind::f7: return riesz_apply(u, order, RieszFamily<Scalar>::kappa());
    case CompactFormula<Scalar>::Kind::f8: return riesz_apply(u, order, RieszFamily<Scalar>::kappa_tilde());
    case CompactFormula<Scalar>::Kind::f9: {
      const Scalar r1 = expansion_coefficients<Scalar>(order, formula.s1, 2, 3).rho(3);
      const Scalar r2 = expansion_coefficients<Scalar>(order, formula.s2, 2, 3).rho(3);
      const auto b1 = riesz_apply(u, order, RieszFamily<Scalar>::generalized(2, formula.s1));
      const auto b2 = riesz_apply(u, order, RieszFamily<Scalar>::generalized(2, formula.s2));
      return Field1D<Scalar>(u.grid, r2 * b1.values - r1 * b2.values);
    }
  }
  throw InvalidArgument("unknown compact formula");
}

// Tridiagonal solve without pivoting.
template <typename Scalar>
Vector<Scalar> solve_tridiagonal(Vector<Scalar> sub, Vector<Scalar> diag, Vector<Scalar> sup, Vector<Scalar> rhs) {
  const Index n = diag.size();
  require(sub.size() == n && sup.size() == n && rhs.size() == n, "tridiagonal: size mismatch");
  using std::abs;
  for (Index i = 1; i < n; ++i) {
    if (diag(i - 1) == Scalar(0)) throw NumericalFailure("tridiagonal: zero pivot");
    const Scalar m = sub(i) / diag(i - 1);
    diag(i) -= m * sup(i - 1);
    rhs(i) -= m * rhs(i - 1);
  }
  if (diag(n - 1) == Scalar(0)) throw NumericalFailure("tridiagonal: zero pivot");
  Vector<Scalar> x(n);
  x(n - 1) = rhs(n - 1) / diag(n - 1);
  for (Index i = n - 2; i >= 0; --i) x(i) = (rhs(i) - sup(i) * x(i + 1)) / diag(i);
  return x;
}

// Solve the compact system for the derivative at every node. With boundary
// values given they close the system; otherwise d_0 and d_M come from
// quadratic extrapolation d_0 = 3 d_1 - 3 d_2 + d_3.
template <typename Scalar>
Field1D<Scalar> riesz_derivative_compact(const Field1D<Scalar>& u, const FractionalOrder<Scalar>& order,
                                         const CompactFormula<Scalar>& formula,
                                         std::optional<std::pair<Scalar, Scalar>> boundary = std::nullopt) {
  const Index M = u.grid.M();
  const CompactSpec<Scalar> c = formula.spec(order);
  const Field1D<Scalar> rhs = compact_rhs(u, order, formula);
  const Index n = M - 1;
  Vector<Scalar> sub = Vector<Scalar>::Constant(n, c.a1);
  Vector<Scalar> sup = Vector<Scalar>::Constant(n, c.a1);
  Vector<Scalar> diag = Vector<Scalar>::Constant(n, c.a0 - 2 * c.a1);
  Vector<Scalar> r = rhs.values.segment(1, n);
  sub(0) = Scalar(0);
  sup(n - 1) = Scalar(0);
  if (boundary) {
    r(0) -= c.a1 * boundary->first;
    r(n - 1) -= c.a1 * boundary->second;
  } else {
    // first row minus second row removes d_3 after substituting the extrapolant
    diag(0) = c.a0;
    sup(0) = -c.a0;
    r(0) = rhs.values(1) - rhs.values(2);
    diag(n - 1) = c.a0;
    sub(n - 1) = -c.a0;
    r(n - 1) = rhs.values(M - 1) - rhs.values(M - 2);
  }
  const Vector<Scalar> d = solve_tridiagonal<Scalar>(sub, diag, sup, r);
  Field1D<Scalar> out(u.grid);
  out.values.segment(1, n) = d;
  if (boundary) {
    out.values(0) = boundary->first;
    out.values(M) = boundary->second;
  } else {
    out.values(0) = 3 * d(0) - 3 * d(1) + d(2);
    out.values(M) = 3 * d(n - 1) - 3 * d(n - 2) + d(n - 3);
  }
  return out;
}

template <typename Scalar = double>
struct OperatorMatrices {
  Matrix<Scalar> E;
  Matrix<Scalar> C;
  Matrix<Scalar> D;
};

// Interior matrices on M intervals: E holds the left sums, D = prefactor (E + E^T)
// and C is the compact operator paired with the family.
template <typename Scalar>
OperatorMatrices<Scalar> build_matrices(const FractionalOrder<Scalar>& order, Index M,
                                        const RieszFamily<Scalar>& fam = RieszFamily<Scalar>::kappa()) {
  require(M >= 4, "build_matrices: M >= 4");
  const Index n = M - 1;
  check_dense_cap(n);
  require(fam.p == 2, "build_matrices: compact pairing exists for p = 2 families");
  const Index sh = fam.integer_shift();
  const auto table = fam.table(order, riesz_table_length(M, fam));
  OperatorMatrices<Scalar> m;
  m.E = Matrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index l = i - j - sh;
      if (l >= 0 && l < table.size()) m.E(i, j) = table[l];
    }
  m.D = order.prefactor() * (m.E + m.E.transpose());
  const CompactSpec<Scalar> c = compact_J<Scalar>(order, 2, fam.s);
  m.C = Matrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    m.C(i, i) = c.a0 - 2 * c.a1;
    if (i > 0) m.C(i, i - 1) = c.a1;
    if (i + 1 < n) m.C(i, i + 1) = c.a1;
  }
  return m;
}

template <typename Scalar = double>
struct Operators2D {
  Matrix<Scalar> T;
  Matrix<Scalar> S;
};

// Unknowns ordered with x fastest: index (j-1)(Ma-1) + (i-1).
// T = Cb (x) Ca, S = Ka/ha^alpha Cb (x) Da + Kb/hb^beta Db (x) Ca.
template <typename Scalar>
Operators2D<Scalar> build_2d(const FractionalOrder<Scalar>& oa, const FractionalOrder<Scalar>& ob, Index Ma, Index Mb,
                             Scalar La = 1, Scalar Lb = 1, Scalar Ka = 1, Scalar Kb = 1) {
  require(Ma >= 4 && Mb >= 4, "build_2d: Ma, Mb >= 4");
  check_dense_cap((Ma - 1) * (Mb - 1));
  require(La > Scalar(0) && Lb > Scalar(0), "build_2d: side lengths must be positive");
  const auto A = build_matrices<Scalar>(oa, Ma);
  const auto B = build_matrices<Scalar>(ob, Mb);
  using std::pow;
  const Scalar ha = La / Scalar(Ma), hb = Lb / Scalar(Mb);
  Operators2D<Scalar> ops;
  ops.T = Eigen::kroneckerProduct(B.C, A.C).eval();
  Matrix<Scalar> sx = Eigen::kroneckerProduct(B.C, A.D).eval();
  Matrix<Scalar> sy = Eigen::kroneckerProduct(B.D, A.C).eval();
  ops.S = (Ka / pow(ha, oa.alpha())) * sx + (Kb / pow(hb, ob.alpha())) * sy;
  return ops;
}

}  // namespace rieszfc
