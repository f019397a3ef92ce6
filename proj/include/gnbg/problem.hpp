#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnbg/rotation.hpp"
#include "gnbg/transform.hpp"

namespace gnbg {

// One basin of attraction. The objective over a component is
//
//   floor + ( sum_i h_diag[i] * T(R (x - center))_i^2 ) ^ lambda
//
// so `floor` is the component's minimum value, attained at `center`.
// `theta` holds the plane angles the rotation was built from; it is kept
// alongside `rotation` so instances can be serialized with their full
// provenance.
template <typename Scalar>
struct Component {
  Vector<Scalar> center;
  Scalar floor = Scalar(0);
  Vector<Scalar> h_diag;
  Matrix<Scalar> rotation;
  Matrix<Scalar> theta;
  Scalar lambda = Scalar(1);
  std::array<Scalar, 2> mu{Scalar(0), Scalar(0)};
  std::array<Scalar, 4> omega{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};

  Eigen::Index dim() const { return center.size(); }
};

// A full problem: box bounds plus one or more components, aggregated by min.
// instance_id is 1..24 for the published suite, 0 for custom instances.
template <typename Scalar>
struct Instance {
  Eigen::Index dim = 0;
  Vector<Scalar> lower;
  Vector<Scalar> upper;
  std::vector<Component<Scalar>> components;
  int instance_id = 0;
  std::uint64_t seed = 0;
};

using Componentd = Component<double>;
using Instanced = Instance<double>;

// Ratio of the largest to smallest axis scaling.
template <typename Scalar>
Scalar condition_number(const Component<Scalar>& c) {
  if (c.h_diag.size() == 0)
    throw std::invalid_argument("condition_number: empty h_diag");
  return c.h_diag.maxCoeff() / c.h_diag.minCoeff();
}

template <typename Scalar>
void validate(const Component<Scalar>& c, const std::string& what = "component") {
  const Eigen::Index d = c.center.size();
  if (d < 1) throw std::invalid_argument(what + ": center must be non-empty");
  if (c.h_diag.size() != d) throw std::invalid_argument(what + ": h_diag size mismatch");
  if (!(c.h_diag.array() > Scalar(0)).all())
    throw std::invalid_argument(what + ": h_diag entries must be positive");
  if (!(c.lambda > Scalar(0)))
    throw std::invalid_argument(what + ": lambda must be positive");
  if (c.rotation.rows() != d || c.rotation.cols() != d)
    throw std::invalid_argument(what + ": rotation shape mismatch");
  if (c.theta.rows() != d || c.theta.cols() != d)
    throw std::invalid_argument(what + ": theta shape mismatch");
  if (!is_strictly_upper_triangular(c.theta))
    throw std::invalid_argument(what + ": theta must be strictly upper-triangular");
  if (!(orthogonality_defect(c.rotation) <= Scalar(kOrthogonalityTol)))
    throw std::invalid_argument(what + ": rotation is not orthogonal");
  for (const Scalar m : c.mu)
    if (!std::isfinite(m)) throw std::invalid_argument(what + ": non-finite mu");
  for (const Scalar w : c.omega)
    if (!std::isfinite(w)) throw std::invalid_argument(what + ": non-finite omega");
  if (!c.center.allFinite() || !c.h_diag.allFinite() || !std::isfinite(c.floor) ||
      !std::isfinite(c.lambda))
    throw std::invalid_argument(what + ": non-finite parameter");
}

template <typename Scalar>
void validate(const Instance<Scalar>& inst) {
  if (inst.dim < 1) throw std::invalid_argument("instance: dim must be positive");
  if (inst.lower.size() != inst.dim || inst.upper.size() != inst.dim)
    throw std::invalid_argument("instance: bounds size mismatch");
  if (!(inst.lower.array() < inst.upper.array()).all())
    throw std::invalid_argument("instance: lower must be strictly below upper");
  if (inst.components.empty())
    throw std::invalid_argument("instance: needs at least one component");
  if (inst.instance_id < 0 || inst.instance_id > 24)
    throw std::invalid_argument("instance: instance_id must be 0 (custom) or 1..24");
  for (std::size_t k = 0; k < inst.components.size(); ++k) {
    if (inst.components[k].dim() != inst.dim)
      throw std::invalid_argument("instance: component " + std::to_string(k) +
                                  " dimension mismatch");
    validate(inst.components[k], "component " + std::to_string(k));
  }
}

// Smallest component floor: the global minimum value of the instance.
template <typename Scalar>
Scalar sigma_min(const Instance<Scalar>& inst) {
  Scalar best = inst.components.front().floor;
  for (const auto& c : inst.components) best = std::min(best, c.floor);
  return best;
}

// Index of the component attaining sigma_min (lowest index on ties); its
// center is the global optimum position.
template <typename Scalar>
Eigen::Index optimum_component(const Instance<Scalar>& inst) {
  Eigen::Index arg = 0;
  for (Eigen::Index k = 1; k < static_cast<Eigen::Index>(inst.components.size()); ++k)
    if (inst.components[static_cast<std::size_t>(k)].floor <
        inst.components[static_cast<std::size_t>(arg)].floor)
      arg = k;
  return arg;
}

}  // namespace gnbg
