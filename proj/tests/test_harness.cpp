#include <catch_amalgamated.hpp>

#include "rieszfc/harness.hpp"

#include <algorithm>
#include <cmath>

using namespace rieszfc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("convergence orders") {
  const auto pure = convergence_orders({8.0, 1.0}, RefinementPath::space_time({1.0 / 4, 1.0 / 16}, {1.0 / 2, 1.0 / 4}));
  REQUIRE(pure.size() == 1);
  CHECK_THAT(*pure[0].time, WithinAbs(1.5, 1e-14));
  CHECK_THAT(pure[0].space, WithinAbs(3.0, 1e-14));

  const auto t4 = convergence_orders({2.984674e-06, 3.613655e-07},
                                     RefinementPath::space_time({0.25, std::sqrt(2.0) / 16}, {0.25, 0.125}));
  CHECK_THAT(*t4[0].time, WithinAbs(2.0307, 5e-5));
  CHECK_THAT(t4[0].space, WithinAbs(3.0460, 5e-5));

  const auto t1 = convergence_orders({0.0001377134, 1.716087e-05}, RefinementPath::space({1.0 / 20, 1.0 / 40}));
  CHECK_FALSE(t1[0].time.has_value());
  CHECK_THAT(t1[0].space, WithinAbs(3.0045, 5e-5));
}

TEST_CASE("refinement path validation") {
  CHECK_THROWS_AS(RefinementPath::space({0.1, 0.2}).validate(), InvalidArgument);
  CHECK_THROWS_AS(RefinementPath::space_time({0.1}, {0.1, 0.05}), InvalidArgument);
  CHECK_THROWS_AS(convergence_orders({1.0, 0.0}, RefinementPath::space({0.1, 0.05})), InvalidArgument);
  CHECK_THROWS_AS(convergence_orders({1.0}, RefinementPath::space({0.1, 0.05})), InvalidArgument);
}

TEST_CASE("pointwise table reproduces reference rows") {
  TableOverrides ov;
  ov.alphas = {1.7};
  ov.max_level = 2;
  const auto rep = run_table(1, ov);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.metric == "b");
  CHECK_THAT(rep.rows[1].error, WithinRel(8.991024e-06, 1e-5));
  CHECK_THAT(*rep.rows[1].order_space, WithinAbs(3.0038, 5e-4));
  CHECK_THAT(*rep.rows[1].ref_error, WithinRel(8.991024e-06, 1e-12));
  CHECK_FALSE(rep.rows[0].order_space.has_value());
}

TEST_CASE("fourth-order table") {
  TableOverrides ov;
  ov.alphas = {1.9};
  ov.max_level = 2;
  const auto rep = run_table(3, ov);
  REQUIRE(rep.rows.size() == 2);
  CHECK_THAT(rep.rows[0].h, WithinRel(1.0 / 40, 1e-15));
  CHECK_THAT(rep.rows[1].error, WithinRel(7.533874e-09, 0.02));
  CHECK_THAT(*rep.rows[1].order_space, WithinAbs(3.7111, 0.05));
}

TEST_CASE("time-dependent table with a single level") {
  TableOverrides ov;
  ov.alphas = {1.3};
  ov.max_level = 1;
  const auto rep = run_table(4, ov);
  REQUIRE(rep.rows.size() == 1);
  CHECK_FALSE(rep.rows[0].order_time.has_value());
  CHECK_FALSE(rep.rows[0].order_space.has_value());
  CHECK(rep.rows[0].M == 4);
  CHECK(rep.rows[0].N == 4);
  CHECK(rep.metric == "max");
}

TEST_CASE("reports are deterministic and serialise") {
  TableOverrides ov;
  ov.alphas = {1.5};
  ov.max_level = 3;
  const auto a = run_table(4, ov), b = run_table(4, ov);
  const std::string csv = to_csv(a);
  CHECK(csv == to_csv(b));
  CHECK(csv.rfind("table,metric,alpha,beta,tau,h,M,N,error", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  const auto j = to_json(a);
  CHECK(j.dump() == to_json(b).dump());
  CHECK(j["table"] == 4);
  REQUIRE(j["rows"].size() == 3);
  CHECK_THAT(j["rows"][2]["error"].get<double>(), WithinRel(a.rows[2].error, 1e-15));
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("reference data") {
  CHECK(reference_rows(1).size() == 25);
  CHECK(reference_rows(3).size() == 20);
  CHECK(reference_rows(5).size() == 20);
  CHECK_THROWS_AS(reference_rows(6), InvalidArgument);
  CHECK_THROWS_AS(run_table(0), InvalidArgument);
}
