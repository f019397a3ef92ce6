#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

#include "gnbg/problem.hpp"
#include "gnbg/transform.hpp"

namespace gnbg {

template <typename Scalar>
struct Evaluation {
  Scalar value;
  Eigen::Index winner;  // 0-based component index, lowest on ties
};

// Value of one component at x. H is diagonal, so the quadratic form is the
// weighted sum of squared transformed coordinates; no dense matrix product is
// ever formed. The base of the lambda power is a sum of nonnegative terms,
// and 0^lambda is taken as 0, so the result is exactly `floor` at the center
// and >= floor everywhere else.
template <typename XDerived, typename Scalar>
Scalar eval_component(const Eigen::MatrixBase<XDerived>& x, const Component<Scalar>& c) {
  if (x.size() != c.dim())
    throw std::invalid_argument("eval_component: dimension mismatch");
  const Vector<Scalar> rotated = c.rotation * (x - c.center);
  Scalar quad = Scalar(0);
  for (Eigen::Index i = 0; i < rotated.size(); ++i) {
    const Scalar t = transform_scalar(rotated[i], c.mu, c.omega);
    quad += c.h_diag[i] * t * t;
  }
  if (quad == Scalar(0)) return c.floor;
  return c.floor + std::pow(quad, c.lambda);
}

// Pointwise minimum over components. Defined for every finite x, also outside
// the box bounds; constraint handling is the harness's job.
template <typename XDerived, typename Scalar>
Evaluation<Scalar> evaluate(const Eigen::MatrixBase<XDerived>& x,
                            const Instance<Scalar>& inst) {
  if (x.size() != inst.dim)
    throw std::invalid_argument("evaluate: dimension mismatch");
  Evaluation<Scalar> best{eval_component(x, inst.components.front()), 0};
  for (Eigen::Index k = 1; k < static_cast<Eigen::Index>(inst.components.size()); ++k) {
    const Scalar v = eval_component(x, inst.components[static_cast<std::size_t>(k)]);
    if (v < best.value) best = {v, k};
  }
  return best;
}

}  // namespace gnbg
