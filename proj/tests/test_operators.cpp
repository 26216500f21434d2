#include <catch_amalgamated.hpp>

#include "rieszfc/analytic.hpp"
#include "rieszfc/harness.hpp"
#include "rieszfc/operators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace rieszfc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double bump(double x) { return x * x * (1 - x) * (1 - x); }

double order_between(double e1, double e2, double h1, double h2) { return std::log(e1 / e2) / std::log(h1 / h2); }

}  // namespace

TEST_CASE("riesz_apply agrees with the dense operator matrix") {
  for (double a : {1.2, 1.5, 1.8}) {
    const FractionalOrder<double> o(a);
    const Grid1D<double> g(0, 1, 30);
    const auto u = Field1D<double>::sample(g, bump);
    const auto fast = riesz_apply(u, o, RieszFamily<double>::kappa());
    const auto m = build_matrices(o, 30);
    const Vector<double> dense = m.D * u.interior() / std::pow(g.h(), a);
    CHECK((fast.interior() - dense).cwiseAbs().maxCoeff() < 1e-12 * dense.cwiseAbs().maxCoeff());
    CHECK(fast.values(0) == 0.0);
    CHECK(fast.values(30) == 0.0);
  }
}

TEST_CASE("riesz_apply commutes with reflection") {
  const FractionalOrder<double> o(1.4);
  const Grid1D<double> g(0, 2, 40);
  auto f = [](double x) { return x * (2 - x) * (1 + x * x); };
  const auto u = Field1D<double>::sample(g, f);
  const auto v = Field1D<double>::sample(g, [&](double x) { return f(2 - x); });
  for (const auto& fam : {RieszFamily<double>::kappa(), RieszFamily<double>::kappa_tilde(),
                          RieszFamily<double>::generalized(3, 0.0)}) {
    const auto du = riesz_apply(u, o, fam);
    const auto dv = riesz_apply(v, o, fam);
    for (Index j = 0; j <= 40; ++j) CHECK_THAT(du.values(j), WithinAbs(dv.values(40 - j), 1e-10));
  }
}

TEST_CASE("raw shifted sums converge at second order") {
  const FractionalOrder<double> o(1.5);
  const auto spec = bump_poly<double>(2);
  const double exact = riesz_poly(spec, o, 0.5);
  double prev = 0;
  for (int M : {20, 40, 80, 160}) {
    const auto u = Field1D<double>::sample(Grid1D<double>(0, 1, M), bump);
    const double e = std::abs(riesz_apply(u, o, RieszFamily<double>::kappa()).values(M / 2) - exact);
    if (prev > 0) CHECK_THAT(std::log2(prev / e), WithinAbs(2.0, 0.15));
    prev = e;
  }
}

TEST_CASE("generalized shifted operator converges at order p") {
  const FractionalOrder<double> o(1.5);
  const auto spec = bump_poly<double>(2);
  const double exact = riesz_poly(spec, o, 0.5);
  std::vector<double> errs;
  for (double h : {1.0 / 20, 1.0 / 40, 1.0 / 80, 1.0 / 160})
    errs.push_back(std::abs(shifted_riesz<double>(3, 0.5, o, bump, 0, 1, 0.5, h) - exact));
  CHECK_THAT(std::log2(errs[2] / errs[3]), WithinAbs(3.0, 0.2));
  // with its compact correction
  const double e1 = pointwise_error_generalized(3, 0.5, 1.5, 1.0 / 80, 0.5);
  const double e2 = pointwise_error_generalized(3, 0.5, 1.5, 1.0 / 160, 0.5);
  CHECK_THAT(std::log2(e1 / e2), WithinAbs(3.0, 0.2));
}

TEST_CASE("scaled central differences are exact on monomials of their order") {
  for (int p = 1; p <= 6; ++p) {
    auto f = [p](double x) { return std::pow(x, p); };
    CHECK_THAT(central_difference_p<double>(f, p, 0.3, 0.1), WithinRel(std::tgamma(p + 1.0), 1e-8));
  }
}

TEST_CASE("compact operator coefficients") {
  for (double a : {1.1, 1.5, 1.9}) {
    const FractionalOrder<double> o(a);
    const auto h = compact_H<double>(o, 2, -1, 1);
    CHECK_THAT(h.a0, WithinRel((22 * a * a + 8) / (12 * a * a), 1e-13));
    const auto l = compact_L<double>(o);
    CHECK(l.a0 == 1.0);
    CHECK_THAT(l.a1, WithinAbs(-(2 * a * a - 6 * a + 3) / (6 * a), 1e-13));
    const auto lt = compact_L_tilde<double>(o);
    CHECK_THAT(lt.a1, WithinAbs(-(2 * a * a + 6 * a + 3) / (6 * a), 1e-13));
  }
  const Grid1D<double> g(0, 1, 10);
  Field1D<double> one(g);
  one.values.setOnes();
  const auto c = compact_apply(one, compact_L<double>(FractionalOrder<double>(1.3)));
  for (Index j = 1; j < 10; ++j) CHECK_THAT(c.values(j), WithinAbs(1.0, 1e-15));
}

TEST_CASE("tridiagonal solver against a dense solve") {
  const Index n = 12;
  Vector<double> sub = Vector<double>::Constant(n, -0.3), sup = Vector<double>::Constant(n, 0.7),
                 diag = Vector<double>::LinSpaced(n, 2.0, 3.0), rhs = Vector<double>::LinSpaced(n, -1.0, 1.0);
  sub(0) = 0;
  sup(n - 1) = 0;
  Matrix<double> A = Matrix<double>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    A(i, i) = diag(i);
    if (i > 0) A(i, i - 1) = sub(i);
    if (i + 1 < n) A(i, i + 1) = sup(i);
  }
  const Vector<double> x = solve_tridiagonal<double>(sub, diag, sup, rhs);
  CHECK((A * x - rhs).norm() < 1e-14);
  CHECK_THROWS_AS(solve_tridiagonal<double>(sub, Vector<double>::Zero(n), sup, rhs), NumericalFailure);
}

TEST_CASE("operator matrices") {
  for (double a : {1.1, 1.5, 1.9}) {
    const FractionalOrder<double> o(a);
    const Index M = 40;
    const auto m = build_matrices(o, M);
    CHECK(m.C.isApprox(m.C.transpose(), 0));
    CHECK(m.D.isApprox(m.D.transpose(), 1e-15));

    Eigen::SelfAdjointEigenSolver<Matrix<double>> ec(m.C);
    const double sig2 = -(2 * a * a - 6 * a + 3) / (6 * a);
    std::vector<double> closed;
    for (Index j = 1; j < M; ++j) {
      const double sn = std::sin(std::numbers::pi * j / (2.0 * M));
      closed.push_back(1 - 4 * sig2 * sn * sn);
    }
    std::sort(closed.begin(), closed.end());
    for (Index j = 0; j < M - 1; ++j) CHECK_THAT(ec.eigenvalues()(j), WithinAbs(closed[j], 1e-12));
    CHECK(ec.eigenvalues().minCoeff() > 4 * std::sqrt(6.0) / 3 - 3);

    Eigen::SelfAdjointEigenSolver<Matrix<double>> ed(m.D);
    CHECK(ed.eigenvalues().maxCoeff() <= 1e-10);
    // lower-triangular Toeplitz layout of the left sums
    CHECK(m.E(5, 3) == m.E(10, 8));
    CHECK(m.E(3, 5) == 0.0);
  }
  CHECK_THROWS_AS(build_matrices(FractionalOrder<double>(1.5), 3), InvalidArgument);
  CHECK_THROWS_AS(build_matrices(FractionalOrder<double>(1.5), 5000), NumericalFailure);
}

TEST_CASE("two-dimensional operators") {
  const FractionalOrder<double> oa(1.3), ob(1.7);
  const auto ops = build_2d(oa, ob, 6, 8);
  REQUIRE(ops.T.rows() == 35);
  CHECK(ops.T.isApprox(ops.T.transpose(), 1e-15));
  CHECK(ops.S.isApprox(ops.S.transpose(), 1e-13));
  Eigen::SelfAdjointEigenSolver<Matrix<double>> es(ops.S);
  CHECK(es.eigenvalues().maxCoeff() <= 1e-9);

  // x-fastest ordering: a field varying only in x sees Cx in the T product
  const auto A = build_matrices(oa, 6), B = build_matrices(ob, 8);
  Vector<double> vx = Vector<double>::LinSpaced(5, 1, 5), vy = Vector<double>::LinSpaced(7, -1, 2);
  Vector<double> prod(35);
  for (Index j = 0; j < 7; ++j) prod.segment(5 * j, 5) = vy(j) * vx;
  Vector<double> expect(35);
  const Vector<double> cx = A.C * vx, cy = B.C * vy;
  for (Index j = 0; j < 7; ++j) expect.segment(5 * j, 5) = cy(j) * cx;
  CHECK((ops.T * prod - expect).norm() < 1e-13);

  CHECK_THROWS_AS(build_2d(oa, ob, 66, 66), NumericalFailure);
}

TEST_CASE("riesz_apply argument checks") {
  const FractionalOrder<double> o(1.5);
  const Grid1D<double> g(0, 1, 10);
  Field1D<double> u(g);
  u.values.setOnes();
  CHECK_THROWS_AS(riesz_apply(u, o, RieszFamily<double>::kappa()), InvalidArgument);
  u.values.setZero();
  const auto t = RieszFamily<double>::kappa().table(o, 2);
  CHECK_THROWS_AS(riesz_apply(u, o, RieszFamily<double>::kappa(), t), InvalidArgument);
  CHECK_THROWS_AS(riesz_apply(u, o, RieszFamily<double>::generalized(2, 0.5)), InvalidArgument);
  CHECK_THROWS_AS(Grid1D<double>(0, 1, 3), InvalidArgument);
}

TEST_CASE("compact formulas on the polynomial example") {
  // reference error at alpha = 1.7, h = 1/40
  CHECK_THAT(pointwise_error(CompactFormula<double>::f7(), 1.7, 1.0 / 40, 0.5, PointMetric::rhs_vs_compact_exact),
             WithinRel(8.991024e-06, 1e-5));
  for (auto f : {CompactFormula<double>::f7(), CompactFormula<double>::f8(), CompactFormula<double>::f9(-1, 1)}) {
    const double e1 = pointwise_error(f, 1.5, 1.0 / 80, 0.5, PointMetric::rhs_vs_compact_exact);
    const double e2 = pointwise_error(f, 1.5, 1.0 / 160, 0.5, PointMetric::rhs_vs_compact_exact);
    CHECK(order_between(e1, e2, 2, 1) > 2.8);
  }
  const double a1 = pointwise_error(CompactFormula<double>::f7(), 1.5, 1.0 / 40, 0.5, PointMetric::compact_solve);
  const double a2 = pointwise_error(CompactFormula<double>::f7(), 1.5, 1.0 / 80, 0.5, PointMetric::compact_solve);
  CHECK_THAT(order_between(a1, a2, 2, 1), WithinAbs(3.0, 0.1));
}

TEST_CASE("compact solve without boundary values uses extrapolation") {
  const FractionalOrder<double> o(1.5);
  const auto spec = bump_poly<double>(2);
  std::vector<double> errs;
  for (int M : {40, 80}) {
    const Grid1D<double> g(0, 1, M);
    const auto u = Field1D<double>::sample(g, bump);
    const auto d = riesz_derivative_compact(u, o, CompactFormula<double>::f7());
    errs.push_back(std::abs(d.values(M / 2) - riesz_poly(spec, o, 0.5)));
  }
  CHECK(errs[1] < errs[0]);
  CHECK(errs[1] < 1e-3);
}
