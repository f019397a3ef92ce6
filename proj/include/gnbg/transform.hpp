#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gnbg {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Log-scale oscillatory distortion applied element-wise before the quadratic
// form. Positive and negative inputs use separate (mu, omega) parameters, so
// the distortion can be asymmetric about the component center:
//
//   a > 0:  exp( log(a)  + mu[0] * (sin(omega[0]*log(a))  + sin(omega[1]*log(a))) )
//   a = 0:  0
//   a < 0: -exp( log(|a|) + mu[1] * (sin(omega[2]*log(|a|)) + sin(omega[3]*log(|a|))) )
//
// The output always carries the sign of the input. With mu = (0, 0) the map
// reduces to the identity (up to exp(log(a)) rounding).
template <typename Scalar>
Scalar transform_scalar(Scalar a, const std::array<Scalar, 2>& mu,
                        const std::array<Scalar, 4>& omega) {
  if (!std::isfinite(a)) throw std::domain_error("transform_scalar: non-finite input");
  if (a == Scalar(0)) return Scalar(0);
  if (a > Scalar(0)) {
    const Scalar la = std::log(a);
    return std::exp(la + mu[0] * (std::sin(omega[0] * la) + std::sin(omega[1] * la)));
  }
  const Scalar la = std::log(-a);
  return -std::exp(la + mu[1] * (std::sin(omega[2] * la) + std::sin(omega[3] * la)));
}

// Element-wise transform of a vector expression.
template <typename Derived>
Vector<typename Derived::Scalar> transform_vector(
    const Eigen::MatrixBase<Derived>& a,
    const std::array<typename Derived::Scalar, 2>& mu,
    const std::array<typename Derived::Scalar, 4>& omega) {
  using Scalar = typename Derived::Scalar;
  const Vector<Scalar> in = a;
  Vector<Scalar> out(in.size());
  for (Eigen::Index i = 0; i < in.size(); ++i) {
    if (!std::isfinite(in[i]))
      throw std::domain_error("transform_vector: non-finite input at index " +
                              std::to_string(i));
    out[i] = transform_scalar(in[i], mu, omega);
  }
  return out;
}

}  // namespace gnbg
