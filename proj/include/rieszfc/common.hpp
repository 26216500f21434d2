#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace rieszfc {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

// Dense assembly refuses systems with more unknowns than this.
inline constexpr Index kDenseCap = 4096;

// Coefficients with |value| below this are treated as zero by sign checks.
inline constexpr double kSignTolerance = 1e-13;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

inline void check_dense_cap(Index unknowns) {
  if (unknowns > kDenseCap)
    throw NumericalFailure("system with " + std::to_string(unknowns) + " unknowns exceeds dense cap " +
                           std::to_string(kDenseCap));
}

}  // namespace rieszfc
