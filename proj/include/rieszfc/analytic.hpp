#pragma once

#include "rieszfc/common.hpp"
#include "rieszfc/fractional_order.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

namespace rieszfc {

// Polynomial on [0, L] held in two bases: sum c x^nu for the left derivative
// and sum c (L - x)^nu for the right derivative. Both must describe the same u.
template <typename Scalar = double>
struct PolySpec {
  Scalar L = 1;
  std::vector<std::pair<Scalar, Scalar>> left;
  std::vector<std::pair<Scalar, Scalar>> right;

  // coeffs[n] multiplies x^n.
  static PolySpec from_monomials(const std::vector<Scalar>& coeffs, Scalar L = 1) {
    require(L > Scalar(0), "PolySpec: L must be positive");
    PolySpec p;
    p.L = L;
    const std::size_t n = coeffs.size();
    std::vector<Scalar> r(n, Scalar(0));
    using std::pow;
    for (std::size_t d = 0; d < n; ++d) {
      if (coeffs[d] == Scalar(0)) continue;
      p.left.emplace_back(Scalar(d), coeffs[d]);
      // x^d = (L - y)^d = sum_k C(d,k) L^{d-k} (-y)^k
      Scalar binom(1);
      for (std::size_t k = 0; k <= d; ++k) {
        r[k] += coeffs[d] * binom * pow(L, Scalar(d - k)) * ((k % 2 == 0) ? Scalar(1) : Scalar(-1));
        binom = binom * Scalar(d - k) / Scalar(k + 1);
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      if (r[k] != Scalar(0)) p.right.emplace_back(Scalar(k), r[k]);
    return p;
  }

  Scalar value(Scalar x) const {
    using std::pow;
    Scalar v(0);
    for (const auto& [nu, c] : left) v += c * pow(x, nu);
    return v;
  }
};

// x^m (L - x)^m
template <typename Scalar = double>
PolySpec<Scalar> bump_poly(int m, Scalar L = 1) {
  require(m >= 1, "bump_poly: m >= 1");
  std::vector<Scalar> c(2 * m + 1, Scalar(0));
  Scalar binom(1);
  using std::pow;
  for (int k = 0; k <= m; ++k) {
    c[m + k] = binom * pow(L, Scalar(m - k)) * ((k % 2 == 0) ? Scalar(1) : Scalar(-1));
    binom = binom * Scalar(m - k) / Scalar(k + 1);
  }
  return PolySpec<Scalar>::from_monomials(c, L);
}

// Riesz derivative of the polynomial at x in [0, L]:
//   prefactor [ sum c Gamma(nu+1)/Gamma(nu+1-alpha) x^{nu-alpha}
//             + sum c Gamma(nu+1)/Gamma(nu+1-alpha) (L-x)^{nu-alpha} ]
template <typename Scalar>
Scalar riesz_poly(const PolySpec<Scalar>& spec, const FractionalOrder<Scalar>& order, Scalar x) {
  require(x >= Scalar(0) && x <= spec.L, "riesz_poly: x outside [0, L]");
  using std::pow;
  using std::tgamma;
  const Scalar a = order.alpha();
  auto part = [&](const std::vector<std::pair<Scalar, Scalar>>& terms, Scalar y) {
    Scalar acc(0);
    for (const auto& [nu, c] : terms) {
      require(nu >= Scalar(0), "riesz_poly: exponents must be non-negative");
      const Scalar e = nu - a;
      if (y == Scalar(0)) {
        if (e > Scalar(0)) continue;
        return std::numeric_limits<Scalar>::infinity();
      }
      acc += c * tgamma(nu + Scalar(1)) / tgamma(nu + Scalar(1) - a) * pow(y, e);
    }
    return acc;
  };
  return order.prefactor() * (part(spec.left, x) + part(spec.right, spec.L - x));
}

}  // namespace rieszfc
