#pragma once

#include "rieszfc/common.hpp"

#include <algorithm>
#include <cmath>

// Truncated formal power series. A series is a coefficient vector indexed by
// the power of z; every routine returns exactly n coefficients.
namespace rieszfc {

template <typename Scalar>
Vector<Scalar> series_multiply(const Vector<Scalar>& a, const Vector<Scalar>& b, Index n) {
  Vector<Scalar> out = Vector<Scalar>::Zero(n);
  for (Index i = 0; i < std::min<Index>(a.size(), n); ++i) {
    if (a(i) == Scalar(0)) continue;
    for (Index j = 0; j < std::min<Index>(b.size(), n - i); ++j) out(i + j) += a(i) * b(j);
  }
  return out;
}

// poly(z)^exponent via the power recurrence
//   b_l = 1/(l a_0) sum_{k=1}^{min(l,deg)} ((exponent+1) k - l) a_k b_{l-k}.
// Requires a_0 > 0.
template <typename Scalar>
Vector<Scalar> series_power(const Vector<Scalar>& poly, Scalar exponent, Index n) {
  require(poly.size() > 0, "series_power: empty polynomial");
  require(n >= 0, "series_power: negative length");
  const Scalar a0 = poly(0);
  if (!(a0 > Scalar(0)))
    throw InvalidArgument("series_power: constant term must be positive");
  using std::exp;
  using std::log;
  Vector<Scalar> b = Vector<Scalar>::Zero(n);
  if (n == 0) return b;
  b(0) = exp(exponent * log(a0));
  const Index deg = poly.size() - 1;
  for (Index l = 1; l < n; ++l) {
    Scalar acc(0);
    for (Index k = 1; k <= std::min(l, deg); ++k)
      acc += ((exponent + Scalar(1)) * Scalar(k) - Scalar(l)) * poly(k) * b(l - k);
    b(l) = acc / (Scalar(l) * a0);
  }
  return b;
}

// e^{c z}
template <typename Scalar>
Vector<Scalar> series_exp_linear(Scalar c, Index n) {
  Vector<Scalar> out(n);
  Scalar term(1);
  for (Index k = 0; k < n; ++k) {
    out(k) = term;
    term *= c / Scalar(k + 1);
  }
  return out;
}

// (1 - e^{-z}) / z
template <typename Scalar>
Vector<Scalar> series_one_minus_exp_over_z(Index n) {
  Vector<Scalar> out(n);
  Scalar fact(1);
  for (Index j = 0; j < n; ++j) {
    fact *= Scalar(j + 1);
    out(j) = ((j % 2 == 0) ? Scalar(1) : Scalar(-1)) / fact;
  }
  return out;
}

// Expand sum_k c_k (1 - z)^k (c indexed from k = 1) into monomial coefficients.
template <typename Scalar>
Vector<Scalar> expand_one_minus_z_basis(const Vector<Scalar>& c) {
  const Index p = c.size();
  Vector<Scalar> out = Vector<Scalar>::Zero(p + 1);
  for (Index k = 1; k <= p; ++k) {
    Scalar binom(1);
    for (Index j = 0; j <= k; ++j) {
      out(j) += c(k - 1) * ((j % 2 == 0) ? binom : -binom);
      binom = binom * Scalar(k - j) / Scalar(j + 1);
    }
  }
  return out;
}

}  // namespace rieszfc
