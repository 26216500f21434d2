#include "rieszfc/analytic.hpp"
#include "rieszfc/coefficients.hpp"
#include "rieszfc/harness.hpp"
#include "rieszfc/operators.hpp"
#include "rieszfc/solver1d.hpp"
#include "rieszfc/solver2d.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

using namespace rieszfc;

namespace {

enum ExitCode { kOk = 0, kInvalid = 2, kNumerical = 3 };

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot open output file " + path);
  return f;
}

struct CoeffsArgs {
  std::string family, method = "rec", format = "csv";
  double alpha = 0, s = 0;
  int p = 2;
  long count = 0;
};

int run_coeffs(const CoeffsArgs& a) {
  static const std::map<std::string, Family> fam = {
      {"grunwald", Family::grunwald}, {"kappa2", Family::kappa2}, {"kappa2t", Family::kappa2_tilde}, {"mu", Family::mu}};
  static const std::map<std::string, Method> meth = {
      {"rec", Method::recursion}, {"conv", Method::convolution}, {"series", Method::series}};
  require(a.count >= 1, "--count must be at least 1");
  const FractionalOrder<double> order(a.alpha);
  const auto t = coefficient_table<double>(fam.at(a.family), order, a.s, a.p, a.count, meth.at(a.method));
  if (a.format == "json") {
    nlohmann::json j;
    j["family"] = a.family;
    j["method"] = a.method;
    j["alpha"] = a.alpha;
    j["s"] = t.shift;
    j["p"] = t.p;
    j["values"] = std::vector<double>(t.values.data(), t.values.data() + t.values.size());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "index,value\n";
    for (Index l = 0; l < t.size(); ++l) std::cout << l << ',' << sci(t[l]) << '\n';
  }
  return kOk;
}

struct DerivArgs {
  std::string formula, metric = "b";
  double alpha = 0, s1 = -1, s2 = 1, s = 0, h = 0, at = 0.5;
  int p = 3;
};

int run_deriv(const DerivArgs& a) {
  double err = 0;
  if (a.formula == "gen") {
    require(a.metric == "b", "--formula gen supports metric b only");
    err = pointwise_error_generalized(a.p, a.s, a.alpha, a.h, a.at);
  } else {
    CompactFormula<double> f = CompactFormula<double>::f7();
    if (a.formula == "f8") f = CompactFormula<double>::f8();
    if (a.formula == "f9") f = CompactFormula<double>::f9(a.s1, a.s2);
    err = pointwise_error(f, a.alpha, a.h, a.at,
                          a.metric == "a" ? PointMetric::compact_solve : PointMetric::rhs_vs_compact_exact);
  }
  std::cout << "formula,metric,alpha,h,x,error\n"
            << a.formula << ',' << a.metric << ',' << sci(a.alpha) << ',' << sci(a.h) << ',' << sci(a.at) << ','
            << sci(err) << '\n';
  return kOk;
}

struct Solve1dArgs {
  double alpha = 0;
  long M = 0, N = 0;
  std::string example = "ex2", dump;
};

int run_solve1d(const Solve1dArgs& a) {
  const auto pb = example2_problem<double>(a.alpha);
  const auto scheme = assemble1d(pb, a.M, a.N);
  const auto run = run1d(scheme, pb);
  const auto exact = Field1D<double>::sample(scheme.grid, [&](double x) { return pb.exact(x, run.time); });
  const auto e = error_norms(run.solution, exact);
  std::cout << "alpha,M,N,tau,time,max_error,l2_error\n"
            << sci(a.alpha) << ',' << a.M << ',' << a.N << ',' << sci(scheme.tau) << ',' << sci(run.time) << ','
            << sci(e.max_abs) << ',' << sci(e.l2) << '\n';
  if (!a.dump.empty()) {
    auto f = open_out(a.dump);
    f << "x,numeric,exact,error\n";
    for (Index j = 0; j <= scheme.grid.M(); ++j) {
      const double u = run.solution.values(j), v = exact.values(j);
      f << sci(scheme.grid.node(j)) << ',' << sci(u) << ',' << sci(v) << ',' << sci(u - v) << '\n';
    }
  }
  return kOk;
}

struct Solve2dArgs {
  double alpha = 0, beta = 0;
  long Ma = 0, Mb = 0, N = 0;
  std::string example = "ex3", dump;
};

int run_solve2d(const Solve2dArgs& a) {
  const auto pb = example3_problem<double>(a.alpha, a.beta);
  const auto scheme = assemble2d(pb, a.Ma, a.Mb, a.N);
  const auto run = run2d(scheme, pb);
  const auto exact = sample_2d(scheme.gx, scheme.gy, [&](double x, double y) { return pb.exact(x, y, run.time); });
  const auto e = error_norms(run.solution, exact);
  std::cout << "alpha,beta,Ma,Mb,N,tau,time,max_error,l2_error\n"
            << sci(a.alpha) << ',' << sci(a.beta) << ',' << a.Ma << ',' << a.Mb << ',' << a.N << ','
            << sci(scheme.tau) << ',' << sci(run.time) << ',' << sci(e.max_abs) << ',' << sci(e.l2) << '\n';
  if (!a.dump.empty()) {
    auto f = open_out(a.dump);
    f << "x,y,numeric,exact,error\n";
    for (Index j = 0; j <= scheme.gy.M(); ++j)
      for (Index i = 0; i <= scheme.gx.M(); ++i) {
        const double u = run.solution.values(i, j), v = exact.values(i, j);
        f << sci(scheme.gx.node(i)) << ',' << sci(scheme.gy.node(j)) << ',' << sci(u) << ',' << sci(v) << ','
          << sci(u - v) << '\n';
      }
  }
  return kOk;
}

struct TableArgs {
  int id = 0;
  std::vector<double> alphas;
  int max_level = 0;
  std::string out, format = "csv";
};

int run_table_cmd(const TableArgs& a) {
  TableOverrides ov;
  ov.alphas = a.alphas;
  if (a.max_level > 0) ov.max_level = a.max_level;
  const auto rep = run_table(a.id, ov);
  const std::string text = a.format == "json" ? to_json(rep).dump(2) + "\n" : to_csv(rep);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    auto f = open_out(a.out);
    f << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order Riesz derivative formulas and compact Crank-Nicolson solvers"};
  app.require_subcommand(1);

  CoeffsArgs ca;
  auto* coeffs = app.add_subcommand("coeffs", "print generating-function coefficients");
  coeffs->add_option("--family", ca.family)->required()->check(CLI::IsMember({"grunwald", "kappa2", "kappa2t", "mu"}));
  coeffs->add_option("--alpha", ca.alpha)->required();
  coeffs->add_option("--s", ca.s);
  coeffs->add_option("--p", ca.p);
  coeffs->add_option("--count", ca.count)->required();
  coeffs->add_option("--method", ca.method)->check(CLI::IsMember({"rec", "conv", "series"}));
  coeffs->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "json"}));

  DerivArgs da;
  auto* deriv = app.add_subcommand("deriv", "pointwise error of a compact formula on u = x^2(1-x)^2");
  deriv->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  deriv->add_option("--formula", da.formula)->required()->check(CLI::IsMember({"f7", "f8", "f9", "gen"}));
  deriv->add_option("--alpha", da.alpha)->required();
  deriv->add_option("--s1", da.s1);
  deriv->add_option("--s2", da.s2);
  deriv->add_option("--p", da.p);
  deriv->add_option("--s", da.s);
  deriv->add_option("--h", da.h)->required();
  deriv->add_option("--at", da.at)->required();
  deriv->add_option("--metric", da.metric)->check(CLI::IsMember({"a", "b"}));

  Solve1dArgs s1;
  auto* solve1d = app.add_subcommand("solve1d", "1D compact Crank-Nicolson run on the manufactured example");
  solve1d->add_option("--alpha", s1.alpha)->required();
  solve1d->add_option("--M", s1.M)->required();
  solve1d->add_option("--N", s1.N)->required();
  solve1d->add_option("--example", s1.example)->check(CLI::IsMember({"ex2"}));
  solve1d->add_option("--dump", s1.dump);

  Solve2dArgs s2;
  auto* solve2d = app.add_subcommand("solve2d", "2D compact Crank-Nicolson run on the manufactured example");
  solve2d->add_option("--alpha", s2.alpha)->required();
  solve2d->add_option("--beta", s2.beta)->required();
  solve2d->add_option("--Ma", s2.Ma)->required();
  solve2d->add_option("--Mb", s2.Mb)->required();
  solve2d->add_option("--N", s2.N)->required();
  solve2d->add_option("--example", s2.example)->check(CLI::IsMember({"ex3"}));
  solve2d->add_option("--dump", s2.dump);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "run one of the convergence studies 1..5");
  table->add_option("--id", ta.id)->required()->check(CLI::Range(1, 5));
  table->add_option("--alphas", ta.alphas)->delimiter(',');
  table->add_option("--max-level", ta.max_level)->check(CLI::PositiveNumber);
  table->add_option("--out", ta.out);
  table->add_option("--format", ta.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*coeffs) return run_coeffs(ca);
    if (*deriv) return run_deriv(da);
    if (*solve1d) return run_solve1d(s1);
    if (*solve2d) return run_solve2d(s2);
    if (*table) return run_table_cmd(ta);
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kInvalid;
}
