#pragma once

#include "rieszfc/common.hpp"
#include "rieszfc/operators.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rieszfc {

struct RefinementStep {
  double h = 0;
  std::optional<double> tau;
};

struct RefinementPath {
  std::vector<RefinementStep> steps;

  static RefinementPath space(const std::vector<double>& hs);
  static RefinementPath space_time(const std::vector<double>& taus, const std::vector<double>& hs);

  // Throws unless h (and tau where present) strictly decrease.
  void validate() const;
};

struct StepOrders {
  std::optional<double> time;
  double space = 0;
};

// Orders between consecutive rows: ln(e_k/e_{k+1}) / ln(step_k/step_{k+1}).
std::vector<StepOrders> convergence_orders(const std::vector<double>& errors, const RefinementPath& path);

enum class PointMetric { rhs_vs_compact_exact, compact_solve };

inline const char* to_string(PointMetric m) { return m == PointMetric::compact_solve ? "a" : "b"; }

// Example 1: u = x^2 (1-x)^2 on [0,1], error of the compact formula at x0.
//  b: |RHS(x0) - compact operator applied to the exact derivative at x0|
//  a: |d(x0) - exact(x0)| with d from the compact solve, exact values closing the ends
double pointwise_error(const CompactFormula<double>& formula, double alpha, double h, double x0, PointMetric metric);

// Metric b for the generalized shifted operator with its compact correction J_{p,s}.
double pointwise_error_generalized(int p, double s, double alpha, double h, double x0);

struct ReportRow {
  double alpha = 0;
  std::optional<double> beta;
  double h = 0;
  std::optional<double> tau;
  Index M = 0;
  Index N = 0;
  double error = 0;
  std::optional<double> error_a;
  std::optional<double> error_b;
  std::optional<double> order_time;
  std::optional<double> order_space;
  std::optional<double> ref_error;
  std::optional<double> ref_order_time;
  std::optional<double> ref_order_space;
};

struct ConvergenceReport {
  int id = 0;
  std::string title;
  std::string metric;  // "a", "b", "none" for pointwise tables, "max" otherwise
  std::vector<ReportRow> rows;
};

struct TableOverrides {
  std::vector<double> alphas;
  std::optional<int> max_level;
};

ConvergenceReport run_table(int id, const TableOverrides& overrides = {});

std::string to_csv(const ConvergenceReport& report);
nlohmann::json to_json(const ConvergenceReport& report);

// Reference values, indexed by table id.
struct ReferenceRow {
  double alpha;
  double beta;  // 0 when absent
  double error;
  double order_time;  // 0 when absent
  double order_space;  // 0 when absent
};
const std::vector<ReferenceRow>& reference_rows(int id);

}  // namespace rieszfc
