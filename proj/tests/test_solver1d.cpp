#include <catch_amalgamated.hpp>

#include "rieszfc/solver1d.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace rieszfc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Problem1D<double> unforced(double alpha, double K) {
  Problem1D<double> pb{K, FractionalOrder<double>(alpha), 1.0, 1.0, {}, {}, {}};
  pb.f = [](double, double) { return 0.0; };
  pb.u0 = [](double x) { return std::sin(3 * x) * x * (1 - x) + (x > 0.5 ? 0.2 : -0.1) * x * (1 - x); };
  return pb;
}

double run_error(double alpha, double tau, Index M) {
  const auto pb = example2_problem<double>(alpha);
  const Index N = steps_for(pb.T, tau);
  const auto s = assemble1d_step(pb, M, tau, N);
  const auto r = run1d(s, pb);
  const auto exact = Field1D<double>::sample(s.grid, [&](double x) { return pb.exact(x, r.time); });
  return error_norms(r.solution, exact).max_abs;
}

}  // namespace

TEST_CASE("error norms") {
  Vector<double> a(2), b(2);
  a << 3, -4;
  b << 0, 0;
  const auto e = error_norms<double>(a, b, 1.0);
  CHECK(e.max_abs == 4.0);
  CHECK(e.l2 == 5.0);
  CHECK_THAT(error_norms<double>(a, b, 0.25).l2, WithinRel(2.5, 1e-15));
  CHECK_THROWS_AS(error_norms<double>(a, Vector<double>::Zero(3), 1.0), InvalidArgument);
}

TEST_CASE("time ladder") {
  CHECK(steps_for(1.0, 0.25) == 4);
  CHECK(steps_for(1.0, std::sqrt(2.0) / 16) == 11);
  CHECK(steps_for(1.0, 1.0 / 3) == 3);
  CHECK_THROWS_AS(steps_for(1.0, 0.0), InvalidArgument);
}

TEST_CASE("energy is non-increasing without forcing") {
  for (double a : {1.1, 1.5, 1.9})
    for (double ratio : {0.1, 1.0, 10.0}) {
      const Index M = 40;
      const double h = 1.0 / M, tau = ratio * h;
      const auto pb = unforced(a, 1.0);
      const auto s = assemble1d_step(pb, M, tau, 30);
      const auto r = run1d(s, pb, true);
      REQUIRE(r.history.size() == 31);
      for (std::size_t k = 1; k < r.history.size(); ++k)
        REQUIRE(compact_energy(s, r.history[k]) <= compact_energy(s, r.history[k - 1]) * (1 + 1e-13));
    }
}

TEST_CASE("discrete solution depends continuously on the data") {
  const double bound = std::sqrt(5 * (4 * std::sqrt(6.0) + 9)) / 5;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1e-3, 1e-3);
  for (double a : {1.2, 1.8}) {
    const Index M = 32;
    auto pb = example2_problem<double>(a);
    const auto s = assemble1d(pb, M, 16);
    Vector<double> eps(M - 1);
    for (Index j = 0; j < M - 1; ++j) eps(j) = dist(rng);
    auto perturbed = pb;
    perturbed.u0 = [&, base = pb.u0](double x) {
      const Index j = static_cast<Index>(std::llround(x * M));
      return base(x) + ((j >= 1 && j < M) ? eps(j - 1) : 0.0);
    };
    const auto r1 = run1d(s, pb, true), r2 = run1d(s, perturbed, true);
    const double e0 = std::sqrt(s.grid.h()) * eps.norm();
    for (std::size_t k = 0; k < r1.history.size(); ++k)
      CHECK(std::sqrt(s.grid.h()) * (r1.history[k] - r2.history[k]).norm() <= bound * e0);
  }
}

TEST_CASE("implicit matrix is symmetric positive definite") {
  const auto pb = example2_problem<double>(1.4);
  const auto s = assemble1d(pb, 20, 5);
  CHECK(s.A_plus.isApprox(s.A_plus.transpose(), 1e-14));
  Eigen::SelfAdjointEigenSolver<Matrix<double>> es(s.A_plus);
  CHECK(es.eigenvalues().minCoeff() > 0);
  CHECK(s.final_time() == 1.0);
}

TEST_CASE("manufactured example reproduces reference errors") {
  // alpha = 1.1, tau = 1/4, h = 1/4 and tau = sqrt(2)/16, h = 1/8
  const double e1 = run_error(1.1, 0.25, 4);
  const double e2 = run_error(1.1, std::sqrt(2.0) / 16, 8);
  CHECK_THAT(e1, WithinRel(2.984674e-06, 1e-5));
  CHECK_THAT(e2, WithinRel(3.613655e-07, 1e-4));
}

TEST_CASE("second order in time, third in space") {
  const double taus[] = {1.0 / 32, std::sqrt(2.0) / 128, 1.0 / 256};
  const Index Ms[] = {16, 32, 64};
  double e[3];
  for (int k = 0; k < 3; ++k) e[k] = run_error(1.5, taus[k], Ms[k]);
  for (int k = 0; k < 2; ++k) {
    const double r = std::log(e[k] / e[k + 1]);
    CHECK_THAT(r / std::log(taus[k] / taus[k + 1]), WithinAbs(2.0, 0.2));
    CHECK_THAT(r / std::log(2.0), WithinAbs(3.0, 0.3));
  }
}

TEST_CASE("solver argument checks") {
  auto pb = example2_problem<double>(1.5);
  CHECK_THROWS_AS(assemble1d(pb, 3, 10), InvalidArgument);
  CHECK_THROWS_AS(assemble1d(pb, 10, 0), InvalidArgument);
  CHECK_THROWS_AS(assemble1d(pb, 5000, 1), NumericalFailure);
  pb.K = 0;
  CHECK_THROWS_AS(assemble1d(pb, 10, 10), InvalidArgument);
  CHECK_THROWS_AS(example2_problem<double>(2.2), InvalidArgument);
}
