#include <catch_amalgamated.hpp>

#include "rieszfc/analytic.hpp"
#include "rieszfc/solver1d.hpp"
#include "rieszfc/solver2d.hpp"
#include "support/riesz_quadrature.hpp"

#include <cmath>

using namespace rieszfc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

using rieszfc::testing::bump2_dd;
using rieszfc::testing::bump6_dd;
using rieszfc::testing::riesz_by_quadrature;

TEST_CASE("riesz_poly matches high-precision reference values") {
  // 40-digit values computed independently
  const double xs[] = {0.25, 0.5, 0.8};
  const double ref[3][3] = {{-0.082018310864268869, -0.2850801201267844, -0.0043052918457879707},
                            {-0.11681840741649531, -0.45135166683820503, 0.017127591515066603},
                            {-0.17927052276019048, -0.72504084534639558, 0.051346112199768874}};
  const double alphas[] = {1.2, 1.5, 1.8};
  const auto spec = bump_poly<double>(2);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      CHECK_THAT(riesz_poly(spec, FractionalOrder<double>(alphas[i]), xs[k]), WithinAbs(ref[i][k], 1e-13));
}

TEST_CASE("riesz_poly agrees with quadrature of the Caputo form") {
  const auto s2 = bump_poly<double>(2);
  const auto s6 = bump_poly<double>(6);
  for (double a : {1.1, 1.37, 1.5, 1.9})
    for (double x : {0.1, 0.33, 0.5, 0.77}) {
      const FractionalOrder<double> o(a);
      CHECK_THAT(riesz_poly(s2, o, x), WithinAbs(riesz_by_quadrature(bump2_dd, a, x), 1e-9));
      CHECK_THAT(riesz_poly(s6, o, x), WithinAbs(riesz_by_quadrature(bump6_dd, a, x), 1e-11));
    }
}

TEST_CASE("polynomial representations") {
  const auto p = PolySpec<double>::from_monomials({0, 0, 3, -1, 0.5}, 2.0);
  for (double x : {0.0, 0.4, 1.3, 2.0}) {
    double right = 0;
    for (const auto& [nu, c] : p.right) right += c * std::pow(2.0 - x, nu);
    CHECK_THAT(right, WithinAbs(p.value(x), 1e-12));
  }
  const auto b = bump_poly<double>(3, 2.0);
  CHECK_THAT(b.value(0.5), WithinRel(std::pow(0.5 * 1.5, 3), 1e-14));
  // symmetric profile has a symmetric derivative
  const FractionalOrder<double> o(1.6);
  CHECK_THAT(riesz_poly(b, o, 0.3), WithinRel(riesz_poly(b, o, 1.7), 1e-12));
  CHECK_THROWS_AS(riesz_poly(b, o, 2.5), InvalidArgument);
  CHECK_THROWS_AS(bump_poly<double>(0), InvalidArgument);
  // u(0) != 0 blows up at the boundary
  const auto c = PolySpec<double>::from_monomials({1.0});
  CHECK(std::isinf(riesz_poly(c, o, 0.0)));
}

TEST_CASE("manufactured sources satisfy their equations") {
  for (double a : {1.1, 1.5, 1.9}) {
    const auto pb = example2_problem<double>(a);
    for (double x : {0.2, 0.5, 0.9})
      for (double t : {0.0, 0.4, 1.0}) {
        const double u = pb.exact(x, t);
        const double res = u + u - pb.K * std::exp(t) * riesz_by_quadrature(bump6_dd, a, x) - pb.f(x, t);
        CHECK(std::abs(res) <= 1e-12);
      }
    CHECK(pb.u0(0.3) == pb.exact(0.3, 0.0));
  }
  const auto p2 = example3_problem<double>(1.3, 1.8);
  for (double x : {0.2, 0.6})
    for (double y : {0.3, 0.5}) {
      const double t = 0.7, u = p2.exact(x, y, t);
      const double bx = std::pow(x * (1 - x), 6), by = std::pow(y * (1 - y), 6);
      const double frac = std::exp(2 * t) * (by * riesz_by_quadrature(bump6_dd, 1.3, x) +
                                             bx * riesz_by_quadrature(bump6_dd, 1.8, y));
      CHECK(std::abs(2 * u + u - p2.K * frac - p2.f(x, y, t)) <= 1e-12);
    }
}
