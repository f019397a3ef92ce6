#include "gnbg/suite.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "gnbg/rng.hpp"
#include "gnbg/sampling.hpp"

namespace gnbg {
namespace {

constexpr double kPi = std::numbers::pi;

struct CenterStyle {
  enum class Kind { UniformBox, Origin, OutsideInnerBox, SameAsFirst };
  Kind kind = Kind::UniformBox;
  double lo = -80.0, hi = 80.0;     // UniformBox, per dimension
  double inner = 0.0, outer = 0.0;  // OutsideInnerBox: reject inside [-inner, inner]^d

  static CenterStyle box(double lo, double hi) { return {Kind::UniformBox, lo, hi, 0, 0}; }
  static CenterStyle origin() { return {Kind::Origin, 0, 0, 0, 0}; }
  static CenterStyle outside(double inner, double outer) {
    return {Kind::OutsideInnerBox, 0, 0, inner, outer};
  }
  static CenterStyle same_as_first() { return {Kind::SameAsFirst, 0, 0, 0, 0}; }
};

struct SigmaStyle {
  bool fixed = true;
  double value = 0.0;
  double lo = 0.0, hi = 0.0;

  static SigmaStyle at(double v) { return {true, v, 0, 0}; }
  static SigmaStyle uniform(double lo, double hi) { return {false, 0, lo, hi}; }
};

struct PairStyle {  // mu
  bool fixed = true;
  double a = 0.0, b = 0.0;  // fixed values, or draw range when !fixed

  static PairStyle at(double x, double y) { return {true, x, y}; }
  static PairStyle uniform(double lo, double hi) { return {false, lo, hi}; }
};

struct QuadStyle {  // omega
  bool fixed = true;
  double v[4] = {0, 0, 0, 0};
  double lo = 0.0, hi = 0.0;

  static QuadStyle at(double a, double b, double c, double d) {
    QuadStyle q;
    q.fixed = true;
    q.v[0] = a;
    q.v[1] = b;
    q.v[2] = c;
    q.v[3] = d;
    return q;
  }
  static QuadStyle zero() { return at(0, 0, 0, 0); }
  static QuadStyle uniform(double lo, double hi) {
    QuadStyle q;
    q.fixed = false;
    q.lo = lo;
    q.hi = hi;
    return q;
  }
};

struct ThetaStyle {
  enum class Kind { Identity, FullRandom, Chain, GatedRandom, RandomThreeGroups };
  Kind kind = Kind::Identity;
  double gate_prob = 1.0;
  double group_angles[3] = {0, 0, 0};

  static ThetaStyle identity() { return {}; }
  static ThetaStyle full() { return {Kind::FullRandom, 1.0, {0, 0, 0}}; }
  static ThetaStyle chain() { return {Kind::Chain, 1.0, {0, 0, 0}}; }
  static ThetaStyle gated(double p) { return {Kind::GatedRandom, p, {0, 0, 0}}; }
  static ThetaStyle three_groups(double a, double b, double c) {
    return {Kind::RandomThreeGroups, 1.0, {a, b, c}};
  }
};

struct ComponentRecipe {
  CenterStyle center;
  SigmaStyle sigma;
  HDiagSpec h;
  ThetaStyle theta;
  double lambda = 1.0;
  PairStyle mu = PairStyle::at(0, 0);
  QuadStyle omega = QuadStyle::zero();
};

struct InstanceRecipe {
  std::vector<ComponentRecipe> components;
};

// Splits dim variables into three random groups (sizes as even as possible)
// and connects every within-group pair with that group's angle.
ThetaSpec expand_three_groups(const ThetaStyle& style, int dim, Rng& rng) {
  ThetaSpec spec;
  spec.kind = ThetaSpec::Kind::Grouped;
  const std::vector<int> perm = rng.permutation(dim);
  const int base = dim / 3;
  const int extra = dim % 3;
  int offset = 0;
  for (int g = 0; g < 3; ++g) {
    const int size = base + (g < extra ? 1 : 0);
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) {
        int p = perm[static_cast<std::size_t>(offset + i)];
        int q = perm[static_cast<std::size_t>(offset + j)];
        if (p > q) std::swap(p, q);
        spec.fixed_angles.push_back({p, q, style.group_angles[g]});
      }
    offset += size;
  }
  return spec;
}

Eigen::VectorXd draw_center(const CenterStyle& style, int dim, Rng& rng,
                            const Instanced& built_so_far) {
  Eigen::VectorXd m(dim);
  switch (style.kind) {
    case CenterStyle::Kind::UniformBox:
      for (int i = 0; i < dim; ++i) m[i] = rng.uniform(style.lo, style.hi);
      break;
    case CenterStyle::Kind::Origin:
      m.setZero();
      break;
    case CenterStyle::Kind::OutsideInnerBox:
      do {
        for (int i = 0; i < dim; ++i) m[i] = rng.uniform(-style.outer, style.outer);
      } while ((m.array().abs() <= style.inner).all());
      break;
    case CenterStyle::Kind::SameAsFirst:
      if (built_so_far.components.empty())
        throw std::logic_error("recipe: SameAsFirst used on the first component");
      m = built_so_far.components.front().center;
      break;
  }
  return m;
}

Componentd expand_component(const ComponentRecipe& recipe, int dim, Rng& rng,
                            const Instanced& built_so_far, bool figure_mode) {
  Componentd c;
  // Draw order: center, floor, h_diag, theta, mu, omega.
  if (figure_mode) {
    c.center = Eigen::VectorXd::Zero(dim);
    c.floor = 0.0;
  } else {
    c.center = draw_center(recipe.center, dim, rng, built_so_far);
    c.floor = recipe.sigma.fixed ? recipe.sigma.value
                                 : rng.uniform(recipe.sigma.lo, recipe.sigma.hi);
  }
  c.h_diag = sample_h_diag(recipe.h, dim, rng);

  if (recipe.theta.kind == ThetaStyle::Kind::RandomThreeGroups) {
    const ThetaSpec spec = expand_three_groups(recipe.theta, dim, rng);
    c.theta = sample_theta(spec, dim, rng);
  } else {
    ThetaSpec spec;
    switch (recipe.theta.kind) {
      case ThetaStyle::Kind::Identity: spec.kind = ThetaSpec::Kind::Identity; break;
      case ThetaStyle::Kind::FullRandom: spec.kind = ThetaSpec::Kind::FullRandom; break;
      case ThetaStyle::Kind::Chain: spec.kind = ThetaSpec::Kind::Chain; break;
      case ThetaStyle::Kind::GatedRandom:
        spec.kind = ThetaSpec::Kind::GatedRandom;
        spec.gate_prob = recipe.theta.gate_prob;
        break;
      case ThetaStyle::Kind::RandomThreeGroups: break;  // handled above
    }
    c.theta = sample_theta(spec, dim, rng);
  }
  c.rotation = build_rotation(c.theta);

  c.lambda = recipe.lambda;
  if (recipe.mu.fixed) {
    c.mu = {recipe.mu.a, recipe.mu.b};
  } else {
    c.mu[0] = rng.uniform(recipe.mu.a, recipe.mu.b);
    c.mu[1] = rng.uniform(recipe.mu.a, recipe.mu.b);
  }
  if (recipe.omega.fixed) {
    c.omega = {recipe.omega.v[0], recipe.omega.v[1], recipe.omega.v[2], recipe.omega.v[3]};
  } else {
    for (auto& w : c.omega) w = rng.uniform(recipe.omega.lo, recipe.omega.hi);
  }
  return c;
}

// Single-component instances (f1..f15) share the same base: center uniform in
// [-80, 80]^d, floor uniform in [-1200, 0].
ComponentRecipe single_base() {
  ComponentRecipe r;
  r.center = CenterStyle::box(-80.0, 80.0);
  r.sigma = SigmaStyle::uniform(-1200.0, 0.0);
  return r;
}

// Five-component instances built on the f16 scheme: one component at the
// dominant floor, the other four drawn from a shallower band.
InstanceRecipe five_component_base(double best_sigma, double others_lo, double others_hi) {
  InstanceRecipe inst;
  for (int k = 0; k < 5; ++k) {
    ComponentRecipe r;
    r.center = CenterStyle::box(-80.0, 80.0);
    r.sigma = k == 0 ? SigmaStyle::at(best_sigma) : SigmaStyle::uniform(others_lo, others_hi);
    inst.components.push_back(r);
  }
  return inst;
}

InstanceRecipe recipe_for(int id) {
  switch (id) {
    case 1: {
      ComponentRecipe r = single_base();
      return {{r}};
    }
    case 2: {
      ComponentRecipe r = single_base();
      r.lambda = 0.05;
      return {{r}};
    }
    case 3: {
      ComponentRecipe r = single_base();
      r.h = HDiagSpec::linspace_permute(0.1, 1e6);
      return {{r}};
    }
    case 4: {
      ComponentRecipe r = single_base();
      r.h = HDiagSpec::uniform(1.0, 10.0);
      r.theta = ThetaStyle::full();
      return {{r}};
    }
    case 5: {
      ComponentRecipe r = single_base();
      r.lambda = 0.05;
      r.h = HDiagSpec::linspace_permute(0.1, 1e6);
      r.theta = ThetaStyle::chain();
      return {{r}};
    }
    case 6: {
      ComponentRecipe r = single_base();
      r.lambda = 0.05;
      r.h = HDiagSpec::linspace_permute(0.1, 1e6);
      r.theta = ThetaStyle::full();
      return {{r}};
    }
    case 7: {
      ComponentRecipe r = single_base();
      r.mu = PairStyle::at(0.2, 0.2);
      r.omega = QuadStyle::at(20, 20, 20, 20);
      return {{r}};
    }
    case 8: {
      ComponentRecipe r = single_base();
      r.mu = PairStyle::at(0.2, 0.2);
      r.omega = QuadStyle::at(50, 50, 50, 50);
      return {{r}};
    }
    case 9: {
      ComponentRecipe r = single_base();
      r.mu = PairStyle::at(1.0, 1.0);
      r.omega = QuadStyle::at(20, 20, 20, 20);
      return {{r}};
    }
    case 10: {
      ComponentRecipe r = single_base();
      r.mu = PairStyle::at(0.2, 0.5);
      r.omega = QuadStyle::at(20, 50, 10, 25);
      return {{r}};
    }
    case 11: {
      ComponentRecipe r = single_base();
      r.mu = PairStyle::at(0.2, 0.5);
      r.omega = QuadStyle::at(20, 50, 10, 25);
      r.theta = ThetaStyle::full();
      return {{r}};
    }
    case 12: {
      ComponentRecipe r = single_base();
      r.mu = PairStyle::at(0.2, 0.5);
      r.omega = QuadStyle::at(20, 50, 10, 25);
      r.theta = ThetaStyle::three_groups(kPi / 4, 3 * kPi / 4, kPi / 8);
      return {{r}};
    }
    case 13: {
      ComponentRecipe r = single_base();
      r.mu = PairStyle::at(1.0, 1.0);
      r.omega = QuadStyle::at(50, 50, 50, 50);
      r.theta = ThetaStyle::full();
      return {{r}};
    }
    case 14: {
      ComponentRecipe r = single_base();
      r.lambda = 0.6;
      r.mu = PairStyle::at(0.7, 0.2);
      r.omega = QuadStyle::at(25, 10, 20, 50);
      r.h = HDiagSpec::pinned_pair(0.01, 1e3, HDiagSpec::Kind::Uniform, 1.0, 1e3);
      r.theta = ThetaStyle::full();
      return {{r}};
    }
    case 15: {
      ComponentRecipe r = single_base();
      r.lambda = 0.1;
      r.mu = PairStyle::at(1.0, 1.0);
      r.omega = QuadStyle::at(10, 10, 10, 10);
      r.h = HDiagSpec::pinned_pair(1.0, 1e5, HDiagSpec::Kind::BetaHeavyTail, 1.0, 1e5, 0.2, 0.2);
      r.theta = ThetaStyle::full();
      return {{r}};
    }
    case 16:
      return five_component_base(-5000.0, -4500.0, -4000.0);
    case 17: {
      InstanceRecipe inst = five_component_base(-5000.0, -4500.0, -4000.0);
      for (auto& r : inst.components) {
        r.h = HDiagSpec::uniform(0.01, 100.0);
        r.theta = ThetaStyle::gated(0.5);
      }
      return inst;
    }
    case 18: {
      InstanceRecipe inst = five_component_base(-5000.0, -4500.0, -4000.0);
      for (auto& r : inst.components) {
        r.mu = PairStyle::uniform(0.2, 0.5);
        r.omega = QuadStyle::uniform(5.0, 50.0);
        r.theta = ThetaStyle::gated(0.5);
      }
      return inst;
    }
    case 19: {
      InstanceRecipe inst = five_component_base(-5000.0, -4500.0, -4000.0);
      for (auto& r : inst.components) {
        r.mu = PairStyle::at(0.5, 0.5);
        r.omega = QuadStyle::uniform(50.0, 100.0);
        r.theta = ThetaStyle::gated(0.5);
      }
      return inst;
    }
    case 20: {
      InstanceRecipe inst = five_component_base(-100.0, -99.0, -98.0);
      for (auto& r : inst.components) {
        r.center = CenterStyle::box(-75.0, -25.0);
        r.lambda = 0.25;
        r.mu = PairStyle::uniform(0.2, 0.5);
        r.omega = QuadStyle::uniform(5.0, 50.0);
        r.theta = ThetaStyle::gated(0.5);
      }
      return inst;
    }
    case 21: {
      InstanceRecipe inst;
      const double sigmas[5] = {-50.0, -45.0, -40.0, -40.0, -40.0};
      for (int k = 0; k < 5; ++k) {
        ComponentRecipe r;
        r.sigma = SigmaStyle::at(sigmas[k]);
        r.lambda = 0.5;
        r.mu = PairStyle::uniform(0.1, 0.2);
        r.omega = QuadStyle::uniform(5.0, 10.0);
        r.theta = ThetaStyle::gated(0.5);
        if (k == 1) {  // the central, broad-basin component
          r.center = CenterStyle::origin();
          r.h = HDiagSpec::unit();
        } else {
          r.center = CenterStyle::outside(30.0, 90.0);
          r.h = HDiagSpec::constant(5.0);
        }
        inst.components.push_back(r);
      }
      return inst;
    }
    case 22: {
      InstanceRecipe inst;
      for (int k = 0; k < 2; ++k) {
        ComponentRecipe r;
        r.center = k == 0 ? CenterStyle::box(80.0, 90.0) : CenterStyle::box(-90.0, -80.0);
        r.sigma = SigmaStyle::at(k == 0 ? -1000.0 : -950.0);
        r.lambda = k == 0 ? 1.0 : 0.9;
        r.h = HDiagSpec::uniform(1.0, 10.0);
        r.theta = ThetaStyle::gated(0.7);
        r.mu = PairStyle::at(0.5, 0.5);
        r.omega = QuadStyle::uniform(20.0, 50.0);
        inst.components.push_back(r);
      }
      return inst;
    }
    case 23: {
      InstanceRecipe inst;
      for (int k = 0; k < 5; ++k) {
        ComponentRecipe r;
        r.center = k == 0 ? CenterStyle::box(-80.0, 80.0) : CenterStyle::same_as_first();
        r.sigma = SigmaStyle::at(-100.0);
        r.lambda = 0.4;
        r.theta = ThetaStyle::gated(0.75);
        r.mu = PairStyle::at(0.5, 0.5);
        r.omega = QuadStyle::uniform(20.0, 50.0);
        inst.components.push_back(r);
      }
      return inst;
    }
    case 24: {
      InstanceRecipe inst = five_component_base(-100.0, -99.0, -98.0);
      for (auto& r : inst.components) {
        r.lambda = 0.25;
        r.mu = PairStyle::uniform(0.2, 0.5);
        r.omega = QuadStyle::uniform(5.0, 50.0);
        r.h = HDiagSpec::uniform(1.0, 1e5);
        r.theta = ThetaStyle::gated(0.75);
      }
      return inst;
    }
    default:
      throw std::invalid_argument("make_instance: id out of range (valid: 1.." +
                                  std::to_string(kSuiteSize) + ")");
  }
}

Instanced expand(int id, std::uint64_t seed, int dim, bool figure_mode) {
  const InstanceRecipe recipe = recipe_for(id);
  Instanced inst;
  inst.dim = dim;
  inst.lower = Eigen::VectorXd::Constant(dim, -100.0);
  inst.upper = Eigen::VectorXd::Constant(dim, 100.0);
  inst.instance_id = id;
  inst.seed = seed;

  Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(id)));
  for (const ComponentRecipe& r : recipe.components)
    inst.components.push_back(expand_component(r, dim, rng, inst, figure_mode));

  validate(inst);
  return inst;
}

}  // namespace

Instanced make_instance(int id, std::uint64_t seed) { return expand(id, seed, 30, false); }

Instanced make_figure_instance(int id, std::uint64_t seed) { return expand(id, seed, 2, true); }

}  // namespace gnbg
