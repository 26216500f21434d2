#pragma once

#include "rieszfc/common.hpp"
#include "rieszfc/fractional_order.hpp"
#include "rieszfc/series.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

namespace rieszfc {

enum class Family { grunwald, kappa2, kappa2_tilde, mu };
enum class Method { recursion, convolution, series };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::grunwald: return "grunwald";
    case Family::kappa2: return "kappa2";
    case Family::kappa2_tilde: return "kappa2t";
    case Family::mu: return "mu";
  }
  return "?";
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::recursion: return "rec";
    case Method::convolution: return "conv";
    case Method::series: return "series";
  }
  return "?";
}

// G(z) = (sum_{k=1}^p c_k (1-z)^k)^alpha. c(k-1) holds c_k, c_1 = 1.
template <typename Scalar>
struct GeneratorPolynomial {
  int p = 1;
  Scalar shift = 0;
  Vector<Scalar> c;

  // Coefficients of sum_k c_k (1-z)^k in powers of z.
  Vector<Scalar> monomial() const { return expand_one_minus_z_basis<Scalar>(c); }

  // P(1-z) evaluated at z = 0, i.e. the value whose alpha power gives mu_0.
  Scalar leading() const { return c.sum(); }
};

namespace detail {

inline void check_p(int p) { require(p >= 1 && p <= 12, "generator order p must be in 1..12"); }

template <typename Scalar>
void check_finite(Scalar s, const char* what) {
  using std::isfinite;
  require(isfinite(static_cast<double>(s)), what);
}

// Coefficients of e^{-s z} (sum_k c_k z^{k-1} ((1-e^{-z})/z)^k)^alpha up to z^{n-1}.
template <typename Scalar>
Vector<Scalar> expansion_series(const Vector<Scalar>& c, Scalar alpha, Scalar s, Index n) {
  const Vector<Scalar> e = series_one_minus_exp_over_z<Scalar>(n);
  Vector<Scalar> base = Vector<Scalar>::Zero(n);
  Vector<Scalar> ek = Vector<Scalar>::Zero(n);
  ek(0) = Scalar(1);
  for (Index k = 1; k <= c.size(); ++k) {
    ek = series_multiply<Scalar>(ek, e, n);
    for (Index j = 0; j + k - 1 < n; ++j) base(j + k - 1) += c(k - 1) * ek(j);
  }
  return series_multiply<Scalar>(series_exp_linear<Scalar>(-s, n), series_power<Scalar>(base, alpha, n), n);
}

}  // namespace detail

// Closed-form generator coefficients for p <= 4.
template <typename Scalar>
GeneratorPolynomial<Scalar> explicit_generator(int p, Scalar s, const FractionalOrder<Scalar>& order) {
  require(p >= 1 && p <= 4, "explicit_generator: closed forms exist for p <= 4");
  const Scalar a = order.alpha();
  GeneratorPolynomial<Scalar> g;
  g.p = p;
  g.shift = s;
  g.c.resize(p);
  g.c(0) = Scalar(1);
  if (p >= 2) g.c(1) = (a + 2 * s) / (2 * a);
  if (p >= 3) g.c(2) = (2 * a * a + 6 * a * s + 3 * s * s) / (6 * a * a);
  if (p >= 4) g.c(3) = (3 * a * a * a + 11 * a * a * s + 9 * a * s * s + 2 * s * s * s) / (12 * a * a * a);
  return g;
}

// Generator for arbitrary p. Each c_k is chosen to cancel the z^{k-1} term of
// the expansion built from c_1..c_{k-1}; adding c_k (1-z)^k changes that term
// by exactly alpha c_k and leaves the lower ones alone.
template <typename Scalar>
GeneratorPolynomial<Scalar> construct_generator(int p, Scalar s, const FractionalOrder<Scalar>& order) {
  detail::check_p(p);
  detail::check_finite(s, "shift must be finite");
  const Scalar a = order.alpha();
  GeneratorPolynomial<Scalar> g;
  g.p = p;
  g.shift = s;
  g.c = Vector<Scalar>::Zero(p);
  g.c(0) = Scalar(1);
  for (int k = 2; k <= p; ++k) {
    Vector<Scalar> partial = g.c.head(k - 1);
    if (!(partial.sum() > Scalar(0)))
      throw InvalidArgument("construct_generator: generator leading value is not positive");
    const Vector<Scalar> series = detail::expansion_series<Scalar>(partial, a, s, k);
    g.c(k - 1) = -series(k - 1) / a;
  }
  return g;
}

// rho(l) is the coefficient of h^l D^{alpha+l} in the expansion of the shifted
// operator; rho(0) = 1 and rho(1..p-1) = 0.
template <typename Scalar>
struct ExpansionCoefficients {
  Scalar alpha = 0;
  Scalar shift = 0;
  int p = 1;
  Vector<Scalar> series;

  Scalar rho(Index l) const {
    require(l >= 0 && l < series.size(), "expansion coefficient index out of range");
    return series(l);
  }
};

template <typename Scalar>
ExpansionCoefficients<Scalar> expansion_coefficients(const FractionalOrder<Scalar>& order, Scalar s, int p,
                                                     Index m) {
  detail::check_p(p);
  require(m >= p, "expansion_coefficients: need m >= p");
  require(m <= 64, "expansion_coefficients: m above supported truncation length 64");
  const GeneratorPolynomial<Scalar> g = construct_generator<Scalar>(p, s, order);
  if (!(g.leading() > Scalar(0))) throw InvalidArgument("expansion_coefficients: generator leading value is not positive");
  ExpansionCoefficients<Scalar> e;
  e.alpha = order.alpha();
  e.shift = s;
  e.p = p;
  e.series = detail::expansion_series<Scalar>(g.c, order.alpha(), s, m + 1);
  return e;
}

template <typename Scalar>
struct CoefficientTable {
  Family family = Family::mu;
  Method method = Method::recursion;
  Scalar alpha = 0;
  Scalar shift = 0;
  int p = 1;
  Vector<Scalar> values;

  Index size() const { return values.size(); }
  Scalar operator[](Index l) const { return values(l); }
};

// Grunwald weights (1-z)^alpha = sum w_m z^m, m = 0..n-1.
template <typename Scalar>
Vector<Scalar> grunwald_weights(const FractionalOrder<Scalar>& order, Index n) {
  require(n >= 0, "grunwald_weights: negative length");
  Vector<Scalar> w(n);
  if (n == 0) return w;
  w(0) = Scalar(1);
  const Scalar a = order.alpha();
  for (Index m = 1; m < n; ++m) w(m) = (Scalar(1) - (a + Scalar(1)) / Scalar(m)) * w(m - 1);
  return w;
}

namespace detail {

// w_m = Gamma(m - alpha) / (Gamma(-alpha) Gamma(m + 1)); for alpha in (1,2) only w_1 is negative.
template <typename Scalar>
Vector<Scalar> grunwald_gamma(Scalar a, Index n) {
  using std::exp;
  using std::lgamma;
  Vector<Scalar> w(n);
  const Scalar lg = lgamma(-a);
  for (Index m = 0; m < n; ++m) {
    const Scalar mag = exp(lgamma(Scalar(m) - a) - lg - lgamma(Scalar(m + 1)));
    w(m) = (m == 1) ? -mag : mag;
  }
  return w;
}

template <typename Scalar>
Vector<Scalar> mu2_recursion(Scalar a, Scalar s, Index n) {
  using std::exp;
  using std::log;
  Vector<Scalar> mu(n);
  if (n == 0) return mu;
  const Scalar d = 3 * a + 2 * s;
  mu(0) = exp(a * log(d / (2 * a)));
  if (n > 1) mu(1) = -4 * a * (a + s) / d * mu(0);
  for (Index l = 2; l < n; ++l) {
    const Scalar L(l);
    mu(l) = (-4 * (a + s) * (a - L + 1) * mu(l - 1) + (a + 2 * s) * (2 * a - L + 2) * mu(l - 2)) / (d * L);
  }
  return mu;
}

template <typename Scalar>
Vector<Scalar> kappa2_recursion(Scalar a, Index n) {
  using std::exp;
  using std::log;
  Vector<Scalar> k(n);
  if (n == 0) return k;
  const Scalar d = 3 * a - 2;
  k(0) = exp(a * log(d / (2 * a)));
  if (n > 1) k(1) = 4 * a * (1 - a) / d * k(0);
  for (Index l = 2; l < n; ++l) {
    const Scalar L(l);
    k(l) = (4 * (1 - a) * (a - L + 1) * k(l - 1) + (a - 2) * (2 * a - L + 2) * k(l - 2)) / (d * L);
  }
  return k;
}

template <typename Scalar>
Vector<Scalar> kappa2t_recursion(Scalar a, Index n) {
  using std::exp;
  using std::log;
  Vector<Scalar> k(n);
  if (n == 0) return k;
  const Scalar d = 3 * a + 2;
  k(0) = exp(a * log(d / (2 * a)));
  if (n > 1) k(1) = -4 * a * (1 + a) / d * k(0);
  for (Index l = 2; l < n; ++l) {
    const Scalar L(l);
    k(l) = (-4 * (1 + a) * (a - L + 1) * k(l - 1) + (a + 2) * (2 * a - L + 2) * k(l - 2)) / (d * L);
  }
  return k;
}

template <typename Scalar>
Vector<Scalar> mu3_recursion(Scalar a, Scalar s, Index n) {
  using std::exp;
  using std::log;
  Vector<Scalar> mu(n);
  if (n == 0) return mu;
  const Scalar a2 = a * a, s2 = s * s;
  const Scalar q = 11 * a2 + 12 * a * s + 3 * s2;
  const Scalar t1 = 6 * a2 + 10 * a * s + 3 * s2;
  const Scalar t2 = 3 * a2 + 8 * a * s + 3 * s2;
  const Scalar t3 = 2 * a2 + 6 * a * s + 3 * s2;
  mu(0) = exp(a * log(q / (6 * a2)));
  if (n > 1) mu(1) = -3 * a * t1 / q * mu(0);
  if (n > 2) {
    const Scalar a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, s3 = s2 * s, s4 = s3 * s;
    const Scalar poly = 108 * a5 + 360 * a4 * s - 42 * a4 + 408 * a3 * s2 - 112 * a3 * s + 180 * a2 * s3 -
                        132 * a2 * s2 + 27 * a * s4 - 60 * a * s3 - 9 * s4;
    mu(2) = 3 * a / (2 * q * q) * poly * mu(0);
  }
  for (Index l = 3; l < n; ++l) {
    const Scalar L(l);
    mu(l) = (-3 * t1 * (a - L + 1) * mu(l - 1) + 3 * t2 * (2 * a - L + 2) * mu(l - 2) -
             t3 * (3 * a - L + 3) * mu(l - 3)) /
            (q * L);
  }
  return mu;
}

// The closed form for mu_{4,3} in circulation does not reproduce G_{4,s}; the
// general four-term recursion with mu_{-1} = 0 is used from l = 3 on.
template <typename Scalar>
Vector<Scalar> mu4_recursion(Scalar a, Scalar s, Index n) {
  using std::exp;
  using std::log;
  Vector<Scalar> mu(n);
  if (n == 0) return mu;
  const Scalar a2 = a * a, a3 = a2 * a, s2 = s * s, s3 = s2 * s;
  const Scalar q = 25 * a3 + 35 * a2 * s + 15 * a * s2 + 2 * s3;
  const Scalar t1 = 24 * a3 + 52 * a2 * s + 27 * a * s2 + 4 * s3;
  const Scalar t2 = 6 * a3 + 19 * a2 * s + 12 * a * s2 + 2 * s3;
  const Scalar t3 = 8 * a3 + 28 * a2 * s + 21 * a * s2 + 4 * s3;
  const Scalar t4 = 3 * a3 + 11 * a2 * s + 9 * a * s2 + 2 * s3;
  mu(0) = exp(a * log(q / (12 * a3)));
  if (n > 1) mu(1) = -2 * a * t1 / q * mu(0);
  if (n > 2) {
    const Scalar a4 = a3 * a, a5 = a4 * a, a6 = a5 * a, a7 = a6 * a;
    const Scalar s4 = s3 * s, s5 = s4 * s, s6 = s5 * s;
    const Scalar poly = 576 * a7 + 2496 * a6 * s + 4000 * a5 * s2 + 3000 * a4 * s3 + 1145 * a3 * s4 +
                        216 * a2 * s5 + 16 * a * s6 - 126 * a6 - 441 * a5 * s - 835 * a4 * s2 - 699 * a3 * s3 -
                        281 * a2 * s4 - 54 * a * s5 - 4 * s6;
    mu(2) = 2 * a / (q * q) * poly * mu(0);
  }
  auto at = [&](Index i) { return i >= 0 ? mu(i) : Scalar(0); };
  for (Index l = 3; l < n; ++l) {
    const Scalar L(l);
    mu(l) = (-2 * t1 * (a - L + 1) * at(l - 1) + 6 * t2 * (2 * a - L + 2) * at(l - 2) -
             2 * t3 * (3 * a - L + 3) * at(l - 3) + t4 * (4 * a - L + 4) * at(l - 4)) /
            (q * L);
  }
  return mu;
}

template <typename Scalar>
Vector<Scalar> mu2_convolution(Scalar a, Scalar s, Index n) {
  using std::exp;
  using std::log;
  const Vector<Scalar> w = grunwald_weights<Scalar>(FractionalOrder<Scalar>(a), n);
  const Scalar d1 = (3 * a + 2 * s) / (2 * a);
  const Scalar d2 = (a + 2 * s) / (3 * a + 2 * s);
  const Scalar scale = exp(a * log(d1));
  Vector<Scalar> dp(n);
  Scalar pw(1);
  for (Index m = 0; m < n; ++m) {
    dp(m) = pw * w(m);
    pw *= d2;
  }
  Vector<Scalar> mu(n);
  for (Index l = 0; l < n; ++l) {
    Scalar acc(0);
    for (Index m = 0; m <= l; ++m) acc += dp(m) * w(l - m);
    mu(l) = scale * acc;
  }
  return mu;
}

// Factor P(z) = (1-z) q_0 prod_i (1 - r_i z) and convolve the binomial series
// of every factor. The r_i may be complex.
template <typename Scalar>
Vector<Scalar> mu_factored_convolution(const GeneratorPolynomial<Scalar>& g, Scalar a, Index n) {
  using Complex = std::complex<Scalar>;
  using std::exp;
  using std::log;
  const Vector<Scalar> pm = g.monomial();
  const Index d = pm.size() - 2;
  Vector<Scalar> q(d + 1);
  q(0) = pm(0);
  for (Index k = 1; k <= d; ++k) q(k) = pm(k) + q(k - 1);
  require(q(0) > Scalar(0), "generator leading value must be positive");
  const Vector<Scalar> w = grunwald_weights<Scalar>(FractionalOrder<Scalar>(a), n);

  Eigen::Matrix<Complex, Eigen::Dynamic, 1> acc(n);
  for (Index m = 0; m < n; ++m) acc(m) = Complex(w(m), 0);
  if (d > 0) {
    Matrix<Scalar> companion = Matrix<Scalar>::Zero(d, d);
    for (Index k = 0; k < d; ++k) companion(0, k) = -q(k + 1) / q(0);
    for (Index k = 1; k < d; ++k) companion(k, k - 1) = Scalar(1);
    Eigen::EigenSolver<Matrix<Scalar>> es(companion, false);
    if (es.info() != Eigen::Success) throw NumericalFailure("root factorisation of generator failed");
    for (Index i = 0; i < d; ++i) {
      const Complex r = es.eigenvalues()(i);
      Eigen::Matrix<Complex, Eigen::Dynamic, 1> f(n);
      Complex pw(1, 0);
      for (Index m = 0; m < n; ++m) {
        f(m) = pw * w(m);
        pw *= r;
      }
      Eigen::Matrix<Complex, Eigen::Dynamic, 1> next(n);
      for (Index l = 0; l < n; ++l) {
        Complex s(0, 0);
        for (Index m = 0; m <= l; ++m) s += f(m) * acc(l - m);
        next(l) = s;
      }
      acc = next;
    }
  }
  const Scalar scale = exp(a * log(q(0)));
  Vector<Scalar> mu(n);
  for (Index m = 0; m < n; ++m) mu(m) = scale * acc(m).real();
  return mu;
}

}  // namespace detail

namespace detail {

template <typename Scalar>
CoefficientTable<Scalar> coefficient_table_impl(Family family, const FractionalOrder<Scalar>& order, Scalar s, int p,
                                                Index n, Method method) {
  const Scalar a = order.alpha();
  CoefficientTable<Scalar> t;
  t.family = family;
  t.method = method;
  t.alpha = a;
  switch (family) {
    case Family::grunwald: t.p = 1; t.shift = Scalar(0); break;
    case Family::kappa2: t.p = 2; t.shift = Scalar(-1); break;
    case Family::kappa2_tilde: t.p = 2; t.shift = Scalar(1); break;
    case Family::mu:
      detail::check_p(p);
      detail::check_finite(s, "shift must be finite");
      t.p = p;
      t.shift = s;
      break;
  }
  if (family == Family::grunwald) {
    switch (method) {
      case Method::recursion: t.values = grunwald_weights<Scalar>(order, n); break;
      case Method::convolution: t.values = detail::grunwald_gamma<Scalar>(a, n); break;
      case Method::series: {
        Vector<Scalar> poly(2);
        poly << Scalar(1), Scalar(-1);
        t.values = series_power<Scalar>(poly, a, n);
        break;
      }
    }
    return t;
  }

  const GeneratorPolynomial<Scalar> g = (t.p <= 4) ? explicit_generator<Scalar>(t.p, t.shift, order)
                                                   : construct_generator<Scalar>(t.p, t.shift, order);
  if (!(g.leading() > Scalar(0)))
    throw InvalidArgument("generator leading value d_1 must be positive for this (alpha, s)");

  switch (method) {
    case Method::recursion:
      if (family == Family::kappa2) {
        t.values = detail::kappa2_recursion<Scalar>(a, n);
      } else if (family == Family::kappa2_tilde) {
        t.values = detail::kappa2t_recursion<Scalar>(a, n);
      } else if (t.p == 1) {
        t.values = grunwald_weights<Scalar>(order, n);
      } else if (t.p == 2) {
        t.values = detail::mu2_recursion<Scalar>(a, t.shift, n);
      } else if (t.p == 3) {
        t.values = detail::mu3_recursion<Scalar>(a, t.shift, n);
      } else if (t.p == 4) {
        t.values = detail::mu4_recursion<Scalar>(a, t.shift, n);
      } else {
        t.values = series_power<Scalar>(g.monomial(), a, n);
      }
      break;
    case Method::convolution:
      if (t.p == 1)
        t.values = detail::grunwald_gamma<Scalar>(a, n);
      else if (t.p == 2)
        t.values = detail::mu2_convolution<Scalar>(a, t.shift, n);
      else
        t.values = detail::mu_factored_convolution<Scalar>(g, a, n);
      break;
    case Method::series: {
      const GeneratorPolynomial<Scalar> gs = construct_generator<Scalar>(t.p, t.shift, order);
      t.values = series_power<Scalar>(gs.monomial(), a, n);
      break;
    }
  }
  return t;
}

}  // namespace detail

// First n coefficients of the chosen family. s is used for the mu family only;
// kappa2 and kappa2_tilde fix s = -1 and s = +1, grunwald is p = 1.
// float and double tables are evaluated in long double: for p >= 3 and s > 0
// the coefficients are small differences of O(100) terms.
template <typename Scalar>
CoefficientTable<Scalar> coefficient_table(Family family, const FractionalOrder<Scalar>& order, Scalar s, int p,
                                           Index n, Method method = Method::recursion) {
  require(n >= 0, "coefficient count must be non-negative");
  if constexpr (std::is_same_v<Scalar, double> || std::is_same_v<Scalar, float>) {
    using Wide = long double;
    const auto w = detail::coefficient_table_impl<Wide>(family, FractionalOrder<Wide>(Wide(order.alpha())), Wide(s), p,
                                                        n, method);
    CoefficientTable<Scalar> t;
    t.family = w.family;
    t.method = w.method;
    t.alpha = order.alpha();
    t.shift = Scalar(w.shift);
    t.p = w.p;
    t.values = w.values.template cast<Scalar>();
    return t;
  } else {
    return detail::coefficient_table_impl<Scalar>(family, order, s, p, n, method);
  }
}

}  // namespace rieszfc
