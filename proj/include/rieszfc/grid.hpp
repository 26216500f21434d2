#pragma once

#include "rieszfc/common.hpp"

#include <cmath>
#include <functional>

namespace rieszfc {

// Uniform nodes x_j = a + j h, j = 0..M.
template <typename Scalar = double>
class Grid1D {
 public:
  Grid1D(Scalar a, Scalar b, Index M) : a_(a), b_(b), M_(M) {
    using std::isfinite;
    require(isfinite(static_cast<double>(a)) && isfinite(static_cast<double>(b)) && b > a,
            "grid requires finite a < b");
    require(M >= 4, "grid requires M >= 4");
    h_ = (b - a) / Scalar(M);
  }

  Scalar a() const { return a_; }
  Scalar b() const { return b_; }
  Index M() const { return M_; }
  Scalar h() const { return h_; }
  Scalar node(Index j) const { return a_ + Scalar(j) * h_; }

  bool operator==(const Grid1D& o) const { return a_ == o.a_ && b_ == o.b_ && M_ == o.M_; }

 private:
  Scalar a_, b_;
  Index M_;
  Scalar h_;
};

template <typename Scalar = double>
struct Field1D {
  Grid1D<Scalar> grid;
  Vector<Scalar> values;

  Field1D(const Grid1D<Scalar>& g) : grid(g), values(Vector<Scalar>::Zero(g.M() + 1)) {}
  Field1D(const Grid1D<Scalar>& g, Vector<Scalar> v) : grid(g), values(std::move(v)) {
    require(values.size() == g.M() + 1, "field length must be M+1");
  }

  template <typename F>
  static Field1D sample(const Grid1D<Scalar>& g, F&& f) {
    Field1D out(g);
    for (Index j = 0; j <= g.M(); ++j) out.values(j) = f(g.node(j));
    return out;
  }

  bool homogeneous() const { return values(0) == Scalar(0) && values(values.size() - 1) == Scalar(0); }

  Vector<Scalar> interior() const { return values.segment(1, grid.M() - 1); }
};

}  // namespace rieszfc
