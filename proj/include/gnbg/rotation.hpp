#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

#include "gnbg/transform.hpp"

namespace gnbg {

// Max-norm tolerance for ||R^T R - I||; rotations built here and rotations
// loaded from instance files must both satisfy it.
inline constexpr double kOrthogonalityTol = 1e-10;

template <typename Derived>
bool is_strictly_upper_triangular(const Eigen::MatrixBase<Derived>& theta) {
  if (theta.rows() != theta.cols()) return false;
  for (Eigen::Index p = 0; p < theta.rows(); ++p)
    for (Eigen::Index q = 0; q <= p; ++q)
      if (theta(p, q) != typename Derived::Scalar(0)) return false;
  return true;
}

template <typename Derived>
typename Derived::Scalar orthogonality_defect(const Eigen::MatrixBase<Derived>& r) {
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> gram = r.transpose() * r;
  return (gram - Matrix<Scalar>::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
}

// Accumulates the product of Givens plane rotations
//
//   R = prod over p < q of G(p, q, theta(p, q))
//
// with the p-loop outer ascending and the q-loop inner ascending; zero angles
// contribute no factor. The factors do not commute, so this order is part of
// the function's definition. Each right-multiplication by G(p, q, t) touches
// only columns p and q of R:
//
//   col_p' =  cos(t) * col_p + sin(t) * col_q
//   col_q' = -sin(t) * col_p + cos(t) * col_q
//
// which keeps construction O(d) per nonzero angle instead of O(d^2).
template <typename Derived>
Matrix<typename Derived::Scalar> build_rotation(const Eigen::MatrixBase<Derived>& theta) {
  using Scalar = typename Derived::Scalar;
  if (theta.rows() != theta.cols())
    throw std::invalid_argument("build_rotation: theta must be square");
  if (!is_strictly_upper_triangular(theta))
    throw std::invalid_argument(
        "build_rotation: theta must be strictly upper-triangular");

  const Eigen::Index d = theta.rows();
  Matrix<Scalar> r = Matrix<Scalar>::Identity(d, d);
  Vector<Scalar> col_p(d);
  for (Eigen::Index p = 0; p + 1 < d; ++p) {
    for (Eigen::Index q = p + 1; q < d; ++q) {
      const Scalar t = theta(p, q);
      if (t == Scalar(0)) continue;
      const Scalar c = std::cos(t);
      const Scalar s = std::sin(t);
      col_p = r.col(p);
      r.col(p) = c * col_p + s * r.col(q);
      r.col(q) = -s * col_p + c * r.col(q);
    }
  }
  return r;
}

}  // namespace gnbg
