#pragma once

#include <Eigen/Core>

#include <numbers>
#include <vector>

#include "gnbg/rng.hpp"
#include "gnbg/transform.hpp"

namespace gnbg {

// One fixed plane angle; indices are 0-based with p < q.
struct FixedAngle {
  int p = 0;
  int q = 0;
  double angle = 0.0;
};

// Recipe for the strictly upper-triangular angle matrix.
//
//   Identity    : all zeros (no variable interaction)
//   FullRandom  : every above-diagonal entry drawn from angle range
//   Chain       : only (i, i+1) entries drawn (minimally connected)
//   Grouped     : exactly the listed fixed angles, no draws
//   GatedRandom : each entry independently made nonzero with probability
//                 gate_prob (then drawn from angle range), else zero
//
// Draw order is row-major over p < q; for GatedRandom the gate uniform is
// drawn first and the angle only when the gate passes, so the total draw
// count per entry is knowable from the produced matrix. Drawn angles are
// never exactly zero, keeping the sparsity structure meaningful.
struct ThetaSpec {
  enum class Kind { Identity, FullRandom, Chain, Grouped, GatedRandom };

  Kind kind = Kind::Identity;
  double gate_prob = 1.0;
  std::vector<FixedAngle> fixed_angles;
  double angle_lo = -std::numbers::pi;
  double angle_hi = std::numbers::pi;
};

Eigen::MatrixXd sample_theta(const ThetaSpec& spec, int dim, Rng& rng);

// Recipe for the principal diagonal of H.
//
//   Unit            : all ones
//   Constant        : all `value`
//   Uniform         : i.i.d. uniform in (lo, hi)
//   LinspacePermute : the dim linearly spaced values over [lo, hi]
//                     (endpoints included exactly), randomly permuted
//   PinnedPair      : pin1 and pin2 placed at two distinct random indices,
//                     the rest filled per fill_kind (Uniform or BetaHeavyTail)
//   BetaHeavyTail   : Beta(alpha, beta) draws mapped affinely onto [lo, hi]
//
// Randomly sampled entries land strictly inside their interval; pinned and
// linspace endpoint values are exact.
struct HDiagSpec {
  enum class Kind { Unit, Constant, Uniform, LinspacePermute, PinnedPair, BetaHeavyTail };

  Kind kind = Kind::Unit;
  double value = 1.0;             // Constant
  double lo = 0.0, hi = 1.0;      // Uniform / LinspacePermute / BetaHeavyTail / fill
  double alpha = 0.2, beta = 0.2; // BetaHeavyTail shapes
  double pin1 = 1.0, pin2 = 1.0;  // PinnedPair values
  Kind fill_kind = Kind::Uniform; // PinnedPair fill rule

  static HDiagSpec unit() { return {}; }
  static HDiagSpec constant(double v) {
    HDiagSpec s;
    s.kind = Kind::Constant;
    s.value = v;
    return s;
  }
  static HDiagSpec uniform(double lo, double hi) {
    HDiagSpec s;
    s.kind = Kind::Uniform;
    s.lo = lo;
    s.hi = hi;
    return s;
  }
  static HDiagSpec linspace_permute(double lo, double hi) {
    HDiagSpec s;
    s.kind = Kind::LinspacePermute;
    s.lo = lo;
    s.hi = hi;
    return s;
  }
  static HDiagSpec beta_heavy_tail(double alpha, double beta, double lo, double hi) {
    HDiagSpec s;
    s.kind = Kind::BetaHeavyTail;
    s.alpha = alpha;
    s.beta = beta;
    s.lo = lo;
    s.hi = hi;
    return s;
  }
  static HDiagSpec pinned_pair(double v1, double v2, Kind fill, double lo, double hi,
                               double alpha = 0.2, double beta = 0.2) {
    HDiagSpec s;
    s.kind = Kind::PinnedPair;
    s.pin1 = v1;
    s.pin2 = v2;
    s.fill_kind = fill;
    s.lo = lo;
    s.hi = hi;
    s.alpha = alpha;
    s.beta = beta;
    return s;
  }
};

Eigen::VectorXd sample_h_diag(const HDiagSpec& spec, int dim, Rng& rng);

// The dim linearly spaced values over [lo, hi] with exact endpoints; exposed
// so tests can compare multisets against the permuted sample.
Eigen::VectorXd linspace_exact(double lo, double hi, int dim);

}  // namespace gnbg
