#include "rieszfc/harness.hpp"

#include "rieszfc/analytic.hpp"
#include "rieszfc/solver1d.hpp"
#include "rieszfc/solver2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rieszfc {

RefinementPath RefinementPath::space(const std::vector<double>& hs) {
  RefinementPath p;
  for (double h : hs) p.steps.push_back({h, std::nullopt});
  p.validate();
  return p;
}

RefinementPath RefinementPath::space_time(const std::vector<double>& taus, const std::vector<double>& hs) {
  require(taus.size() == hs.size(), "refinement path: tau and h ladders differ in length");
  RefinementPath p;
  for (std::size_t k = 0; k < hs.size(); ++k) p.steps.push_back({hs[k], taus[k]});
  p.validate();
  return p;
}

void RefinementPath::validate() const {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    require(steps[k].h > 0, "refinement path: h must be positive");
    require(steps[k].tau.has_value() == steps[0].tau.has_value(), "refinement path: tau present on some rows only");
    if (steps[k].tau) require(*steps[k].tau > 0, "refinement path: tau must be positive");
    if (k == 0) continue;
    require(steps[k].h < steps[k - 1].h, "refinement path: h must strictly decrease");
    if (steps[k].tau) require(*steps[k].tau < *steps[k - 1].tau, "refinement path: tau must strictly decrease");
  }
}

std::vector<StepOrders> convergence_orders(const std::vector<double>& errors, const RefinementPath& path) {
  require(errors.size() >= 2, "convergence_orders: need at least two rows");
  require(errors.size() == path.steps.size(), "convergence_orders: errors and path differ in length");
  path.validate();
  for (double e : errors) require(e > 0 && std::isfinite(e), "convergence_orders: errors must be positive");
  std::vector<StepOrders> out;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    const double r = std::log(errors[k] / errors[k + 1]);
    StepOrders o;
    o.space = r / std::log(path.steps[k].h / path.steps[k + 1].h);
    if (path.steps[k].tau) o.time = r / std::log(*path.steps[k].tau / *path.steps[k + 1].tau);
    out.push_back(o);
  }
  return out;
}

namespace {

Index grid_index(double L, double h, double x, const char* what) {
  const double Mf = L / h;
  const Index M = static_cast<Index>(std::llround(Mf));
  require(std::abs(Mf - double(M)) < 1e-9 * Mf, std::string(what) + ": 1/h must be an integer");
  const Index j = static_cast<Index>(std::llround(x / h));
  require(j > 0 && j < M && std::abs(double(j) * h - x) < 1e-9, std::string(what) + ": x must be an interior node");
  return j;
}

}  // namespace

double pointwise_error(const CompactFormula<double>& formula, double alpha, double h, double x0, PointMetric metric) {
  const FractionalOrder<double> order(alpha);
  require(h > 0, "pointwise_error: h must be positive");
  const Index j = grid_index(1.0, h, x0, "pointwise_error");
  const Index M = static_cast<Index>(std::llround(1.0 / h));
  const Grid1D<double> grid(0.0, 1.0, M);
  const PolySpec<double> u = bump_poly<double>(2);
  auto exact = [&](double x) { return riesz_poly<double>(u, order, x); };
  const Field1D<double> field = Field1D<double>::sample(grid, [&](double x) { return u.value(x); });
  if (metric == PointMetric::rhs_vs_compact_exact) {
    const Field1D<double> rhs = compact_rhs(field, order, formula);
    return std::abs(rhs.values(j) - compact_apply_at<double>(exact, formula.spec(order), grid.node(j), grid.h()));
  }
  const Field1D<double> d =
      riesz_derivative_compact(field, order, formula, std::make_optional(std::make_pair(exact(0.0), exact(1.0))));
  return std::abs(d.values(j) - exact(grid.node(j)));
}

double pointwise_error_generalized(int p, double s, double alpha, double h, double x0) {
  const FractionalOrder<double> order(alpha);
  require(h > 0, "pointwise_error_generalized: h must be positive");
  require(x0 - 0.5 * p * h > 0 && x0 + 0.5 * p * h < 1, "pointwise_error_generalized: stencil leaves (0,1)");
  const PolySpec<double> u = bump_poly<double>(2);
  auto exact = [&](double x) { return riesz_poly<double>(u, order, x); };
  auto value = [&](double x) { return u.value(x); };
  const double lhs = shifted_riesz<double>(p, s, order, value, 0.0, 1.0, x0, h);
  return std::abs(lhs - compact_apply_at<double>(exact, compact_J<double>(order, p, s), x0, h));
}

namespace {

const std::vector<double> kAlphas = {1.1, 1.3, 1.5, 1.7, 1.9};
const std::vector<std::pair<double, double>> kPairs = {{1.1, 1.8}, {1.3, 1.6}, {1.5, 1.5}, {1.7, 1.4}, {1.9, 1.2}};

bool same(double a, double b) { return std::abs(a - b) < 1e-12; }

std::vector<const ReferenceRow*> reference_for(int id, double alpha, double beta) {
  std::vector<const ReferenceRow*> out;
  for (const auto& r : reference_rows(id))
    if (same(r.alpha, alpha) && same(r.beta, beta)) out.push_back(&r);
  return out;
}

std::vector<double> selected_alphas(const TableOverrides& ov) {
  if (ov.alphas.empty()) return kAlphas;
  return ov.alphas;
}

std::size_t levels(std::size_t full, const TableOverrides& ov) {
  if (!ov.max_level) return full;
  require(*ov.max_level >= 1, "max-level must be at least 1");
  return std::min<std::size_t>(full, static_cast<std::size_t>(*ov.max_level));
}

bool within(double value, double ref, double rel) { return std::abs(value - ref) <= rel * std::abs(ref); }

void fill_orders(std::vector<ReportRow>& rows, std::size_t first, std::size_t count) {
  if (count < 2) return;
  std::vector<double> errs;
  RefinementPath path;
  for (std::size_t k = 0; k < count; ++k) {
    errs.push_back(rows[first + k].error);
    path.steps.push_back({rows[first + k].h, rows[first + k].tau});
  }
  const auto ords = convergence_orders(errs, path);
  for (std::size_t k = 0; k < ords.size(); ++k) {
    rows[first + k + 1].order_space = ords[k].space;
    rows[first + k + 1].order_time = ords[k].time;
  }
}

ConvergenceReport pointwise_table(int id, const TableOverrides& ov) {
  ConvergenceReport rep;
  rep.id = id;
  CompactFormula<double> formula = CompactFormula<double>::f7();
  double h0 = 1.0 / 20;
  std::size_t full = 5;
  if (id == 1) {
    rep.title = "kappa formula with compact operator L, u = x^2(1-x)^2, error at x = 0.5";
  } else if (id == 2) {
    formula = CompactFormula<double>::f8();
    rep.title = "kappa tilde formula with compact operator L tilde, u = x^2(1-x)^2, error at x = 0.5";
  } else {
    formula = CompactFormula<double>::f9(-1.0, 1.0);
    h0 = 1.0 / 40;
    full = 4;
    rep.title = "fourth-order shift combination (-1, 1), u = x^2(1-x)^2, error at x = 0.5";
  }
  const std::size_t nlev = levels(full, ov);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (double alpha : selected_alphas(ov)) {
    const auto refs = reference_for(id, alpha, 0.0);
    const std::size_t first = rep.rows.size();
    double h = h0;
    for (std::size_t k = 0; k < nlev; ++k, h /= 2) {
      ReportRow row;
      row.alpha = alpha;
      row.h = h;
      row.M = static_cast<Index>(std::llround(1.0 / h));
      row.error_a = pointwise_error(formula, alpha, h, 0.5, PointMetric::compact_solve);
      row.error_b = pointwise_error(formula, alpha, h, 0.5, PointMetric::rhs_vs_compact_exact);
      if (k < refs.size()) {
        row.ref_error = refs[k]->error;
        if (refs[k]->order_space != 0) row.ref_order_space = refs[k]->order_space;
      }
      rep.rows.push_back(row);
    }
    blocks.emplace_back(first, nlev);
  }
  auto matches = [&](bool use_a) {
    bool any = false;
    for (const auto& r : rep.rows) {
      if (!r.ref_error) continue;
      any = true;
      if (!within(use_a ? *r.error_a : *r.error_b, *r.ref_error, 0.02)) return false;
    }
    return any;
  };
  bool use_a = false;
  if (matches(false)) {
    rep.metric = "b";
  } else if (matches(true)) {
    rep.metric = "a";
    use_a = true;
  } else {
    rep.metric = "none";
  }
  for (auto& r : rep.rows) r.error = use_a ? *r.error_a : *r.error_b;
  for (const auto& [first, count] : blocks) fill_orders(rep.rows, first, count);
  return rep;
}

const std::vector<double> kTauLadder = {0.25, std::sqrt(2.0) / 16, 1.0 / 32, std::sqrt(2.0) / 128, 1.0 / 256};
const std::vector<double> kHLadder = {0.25, 0.125, 0.0625, 0.03125, 0.015625};

void attach_refs(ReportRow& row, const std::vector<const ReferenceRow*>& refs, std::size_t k) {
  if (k >= refs.size()) return;
  row.ref_error = refs[k]->error;
  if (k > 0) {
    row.ref_order_time = refs[k]->order_time;
    row.ref_order_space = refs[k]->order_space;
  }
}

ConvergenceReport solver1d_table(const TableOverrides& ov) {
  ConvergenceReport rep;
  rep.id = 4;
  rep.title = "1D compact Crank-Nicolson, u = e^t x^6(1-x)^6, K = e^-12, max-norm error at t = N tau";
  rep.metric = "max";
  const std::size_t nlev = levels(kHLadder.size(), ov);
  for (double alpha : selected_alphas(ov)) {
    const auto refs = reference_for(4, alpha, 0.0);
    const auto pb = example2_problem<double>(alpha);
    const std::size_t first = rep.rows.size();
    for (std::size_t k = 0; k < nlev; ++k) {
      const double tau = kTauLadder[k];
      const Index M = static_cast<Index>(std::llround(1.0 / kHLadder[k]));
      const Index N = steps_for(pb.T, tau);
      const auto scheme = assemble1d_step(pb, M, tau, N);
      const auto run = run1d(scheme, pb);
      const auto exact =
          Field1D<double>::sample(scheme.grid, [&](double x) { return pb.exact(x, run.time); });
      ReportRow row;
      row.alpha = alpha;
      row.h = kHLadder[k];
      row.tau = tau;
      row.M = M;
      row.N = N;
      row.error = error_norms(run.solution, exact).max_abs;
      attach_refs(row, refs, k);
      rep.rows.push_back(row);
    }
    fill_orders(rep.rows, first, nlev);
  }
  return rep;
}

ConvergenceReport solver2d_table(const TableOverrides& ov) {
  ConvergenceReport rep;
  rep.id = 5;
  rep.title = "2D compact Crank-Nicolson, u = e^2t x^6(1-x)^6 y^6(1-y)^6, K = pi^-8, max-norm error at t = N tau";
  rep.metric = "max";
  const std::size_t nlev = levels(4, ov);
  std::vector<std::pair<double, double>> pairs;
  if (ov.alphas.empty()) {
    pairs = kPairs;
  } else {
    for (double a : ov.alphas) {
      auto it = std::find_if(kPairs.begin(), kPairs.end(), [&](const auto& p) { return same(p.first, a); });
      pairs.emplace_back(a, it != kPairs.end() ? it->second : a);
    }
  }
  for (const auto& [alpha, beta] : pairs) {
    const auto refs = reference_for(5, alpha, beta);
    const auto pb = example3_problem<double>(alpha, beta);
    const std::size_t first = rep.rows.size();
    for (std::size_t k = 0; k < nlev; ++k) {
      const double tau = kTauLadder[k];
      const Index M = static_cast<Index>(std::llround(1.0 / kHLadder[k]));
      const Index N = steps_for(pb.T, tau);
      const auto scheme = assemble2d_step(pb, M, M, tau, N);
      const auto run = run2d(scheme, pb);
      const auto exact =
          sample_2d(scheme.gx, scheme.gy, [&](double x, double y) { return pb.exact(x, y, run.time); });
      ReportRow row;
      row.alpha = alpha;
      row.beta = beta;
      row.h = kHLadder[k];
      row.tau = tau;
      row.M = M;
      row.N = N;
      row.error = error_norms(run.solution, exact).max_abs;
      attach_refs(row, refs, k);
      rep.rows.push_back(row);
    }
    fill_orders(rep.rows, first, nlev);
  }
  return rep;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

}  // namespace

ConvergenceReport run_table(int id, const TableOverrides& overrides) {
  require(id >= 1 && id <= 5, "table id must be 1..5");
  if (id <= 3) return pointwise_table(id, overrides);
  if (id == 4) return solver1d_table(overrides);
  return solver2d_table(overrides);
}

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "table,metric,alpha,beta,tau,h,M,N,error,error_a,error_b,order_time,order_space,ref_error,ref_order_time,"
        "ref_order_space\n";
  for (const auto& r : report.rows) {
    os << report.id << ',' << report.metric << ',' << fmt(r.alpha) << ',' << fmt(r.beta) << ',' << fmt(r.tau) << ','
       << fmt(r.h) << ',' << r.M << ',' << r.N << ',' << fmt(r.error) << ',' << fmt(r.error_a) << ','
       << fmt(r.error_b) << ',' << fmt(r.order_time) << ',' << fmt(r.order_space) << ',' << fmt(r.ref_error) << ','
       << fmt(r.ref_order_time) << ',' << fmt(r.ref_order_space) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ConvergenceReport& report) {
  nlohmann::json j;
  j["table"] = report.id;
  j["title"] = report.title;
  j["metric"] = report.metric;
  j["rows"] = nlohmann::json::array();
  auto put = [](nlohmann::json& o, const char* key, const std::optional<double>& v) {
    if (v) o[key] = *v;
  };
  for (const auto& r : report.rows) {
    nlohmann::json o;
    o["alpha"] = r.alpha;
    put(o, "beta", r.beta);
    put(o, "tau", r.tau);
    o["h"] = r.h;
    o["M"] = r.M;
    o["N"] = r.N;
    o["error"] = r.error;
    put(o, "error_a", r.error_a);
    put(o, "error_b", r.error_b);
    put(o, "order_time", r.order_time);
    put(o, "order_space", r.order_space);
    put(o, "ref_error", r.ref_error);
    put(o, "ref_order_time", r.ref_order_time);
    put(o, "ref_order_space", r.ref_order_space);
    j["rows"].push_back(o);
  }
  return j;
}

}  // namespace rieszfc
