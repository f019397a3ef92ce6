#include "gnbg/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnbg {

Eigen::MatrixXd sample_theta(const ThetaSpec& spec, int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("sample_theta: dim must be positive");
  if (spec.kind == ThetaSpec::Kind::GatedRandom &&
      !(spec.gate_prob >= 0.0 && spec.gate_prob <= 1.0))
    throw std::invalid_argument("sample_theta: gate_prob must be in [0, 1]");
  if (!(spec.angle_lo < spec.angle_hi))
    throw std::invalid_argument("sample_theta: empty angle range");

  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(dim, dim);
  switch (spec.kind) {
    case ThetaSpec::Kind::Identity:
      break;
    case ThetaSpec::Kind::FullRandom:
      for (int p = 0; p < dim - 1; ++p)
        for (int q = p + 1; q < dim; ++q)
          theta(p, q) = rng.nonzero_uniform(spec.angle_lo, spec.angle_hi);
      break;
    case ThetaSpec::Kind::Chain:
      for (int i = 0; i < dim - 1; ++i)
        theta(i, i + 1) = rng.nonzero_uniform(spec.angle_lo, spec.angle_hi);
      break;
    case ThetaSpec::Kind::Grouped:
      for (const FixedAngle& f : spec.fixed_angles) {
        if (f.p < 0 || f.q <= f.p || f.q >= dim)
          throw std::invalid_argument("sample_theta: fixed angle indices need 0 <= p < q < dim");
        theta(f.p, f.q) = f.angle;
      }
      break;
    case ThetaSpec::Kind::GatedRandom:
      for (int p = 0; p < dim - 1; ++p)
        for (int q = p + 1; q < dim; ++q)
          if (rng.uniform01() <= spec.gate_prob)
            theta(p, q) = rng.nonzero_uniform(spec.angle_lo, spec.angle_hi);
      break;
  }
  return theta;
}

Eigen::VectorXd linspace_exact(double lo, double hi, int dim) {
  if (dim < 2) throw std::invalid_argument("linspace_exact: need dim >= 2");
  Eigen::VectorXd v(dim);
  const double step = (hi - lo) / static_cast<double>(dim - 1);
  for (int i = 0; i < dim; ++i) v[i] = lo + static_cast<double>(i) * step;
  v[0] = lo;
  v[dim - 1] = hi;
  return v;
}

namespace {

double draw_fill(HDiagSpec::Kind kind, const HDiagSpec& spec, Rng& rng) {
  if (kind == HDiagSpec::Kind::Uniform) return rng.uniform(spec.lo, spec.hi);
  if (kind == HDiagSpec::Kind::BetaHeavyTail) {
    double v = spec.lo + (spec.hi - spec.lo) * rng.beta(spec.alpha, spec.beta);
    if (v <= spec.lo) v = std::nextafter(spec.lo, spec.hi);
    if (v >= spec.hi) v = std::nextafter(spec.hi, spec.lo);
    return v;
  }
  throw std::invalid_argument("sample_h_diag: unsupported fill kind");
}

}  // namespace

Eigen::VectorXd sample_h_diag(const HDiagSpec& spec, int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("sample_h_diag: dim must be positive");
  const bool ranged = spec.kind == HDiagSpec::Kind::Uniform ||
                      spec.kind == HDiagSpec::Kind::LinspacePermute ||
                      spec.kind == HDiagSpec::Kind::BetaHeavyTail ||
                      spec.kind == HDiagSpec::Kind::PinnedPair;
  if (ranged && !(spec.lo < spec.hi))
    throw std::invalid_argument("sample_h_diag: need lo < hi");

  Eigen::VectorXd h(dim);
  switch (spec.kind) {
    case HDiagSpec::Kind::Unit:
      h.setOnes();
      break;
    case HDiagSpec::Kind::Constant:
      if (!(spec.value > 0.0))
        throw std::invalid_argument("sample_h_diag: constant value must be positive");
      h.setConstant(spec.value);
      break;
    case HDiagSpec::Kind::Uniform:
      for (int i = 0; i < dim; ++i) h[i] = rng.uniform(spec.lo, spec.hi);
      break;
    case HDiagSpec::Kind::LinspacePermute: {
      const Eigen::VectorXd values = linspace_exact(spec.lo, spec.hi, dim);
      const std::vector<int> perm = rng.permutation(dim);
      for (int i = 0; i < dim; ++i) h[i] = values[perm[static_cast<std::size_t>(i)]];
      break;
    }
    case HDiagSpec::Kind::PinnedPair: {
      if (dim < 2) throw std::invalid_argument("sample_h_diag: pinned pair needs dim >= 2");
      const int i1 = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(dim)));
      int i2 = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(dim - 1)));
      if (i2 >= i1) ++i2;
      h[i1] = spec.pin1;
      h[i2] = spec.pin2;
      for (int i = 0; i < dim; ++i)
        if (i != i1 && i != i2) h[i] = draw_fill(spec.fill_kind, spec, rng);
      break;
    }
    case HDiagSpec::Kind::BetaHeavyTail:
      for (int i = 0; i < dim; ++i) h[i] = draw_fill(HDiagSpec::Kind::BetaHeavyTail, spec, rng);
      break;
  }
  if (!(h.array() > 0.0).all())
    throw std::invalid_argument("sample_h_diag: produced non-positive entry");
  return h;
}

}  // namespace gnbg
