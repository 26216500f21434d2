#pragma once

#include "rieszfc/fractional_order.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace rieszfc::testing {

// Riesz derivative from the Riemann-Liouville definition for u with u = u' = 0 at
// both ends, where d^2/dx^2 int_0^x (x-t)^{1-a} u(t) dt = int_0^x (x-t)^{1-a} u''(t) dt.
// w = (x-t)^{2-a} removes the endpoint singularity.
template <typename D2>
double riesz_by_quadrature(D2 u2, double a, double x, double L = 1) {
  boost::math::quadrature::tanh_sinh<double> q;
  const double b = 2 - a, tol = 1e-14;
  const double left = q.integrate([&](double w) { return u2(x - std::pow(w, 1 / b)); }, 0.0, std::pow(x, b), tol);
  const double right =
      q.integrate([&](double w) { return u2(x + std::pow(w, 1 / b)); }, 0.0, std::pow(L - x, b), tol);
  return FractionalOrder<double>(a).prefactor() * (left + right) / (b * std::tgamma(b));
}

// second derivatives of x^2 (1-x)^2 and x^6 (1-x)^6
inline double bump2_dd(double x) { return 2 - 12 * x + 12 * x * x; }

inline double bump6_dd(double x) {
  const double y = 1 - x;
  return 30 * std::pow(x, 4) * std::pow(y, 6) - 72 * std::pow(x, 5) * std::pow(y, 5) +
         30 * std::pow(x, 6) * std::pow(y, 4);
}

}  // namespace rieszfc::testing
