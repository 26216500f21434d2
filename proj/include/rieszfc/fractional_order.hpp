#pragma once

#include "rieszfc/common.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace rieszfc {

// Order alpha of the Riesz derivative, restricted to the open interval (1, 2).
template <typename Scalar = double>
class FractionalOrder {
 public:
  static constexpr double kMargin = 1e-8;

  explicit FractionalOrder(Scalar alpha) : alpha_(alpha) {
    using std::isfinite;
    if (!isfinite(static_cast<double>(alpha)) || alpha < Scalar(1 + kMargin) ||
        alpha > Scalar(2 - kMargin)) {
      std::ostringstream msg;
      msg << "fractional order must lie in [1+1e-8, 2-1e-8], got " << static_cast<double>(alpha);
      throw InvalidArgument(msg.str());
    }
    using std::cos;
    prefactor_ = Scalar(-1) / (Scalar(2) * cos(std::numbers::pi_v<Scalar> * alpha_ / Scalar(2)));
  }

  Scalar alpha() const { return alpha_; }

  // -1 / (2 cos(pi alpha / 2)), positive on (1, 2).
  Scalar prefactor() const { return prefactor_; }

 private:
  Scalar alpha_;
  Scalar prefactor_;
};

}  // namespace rieszfc
