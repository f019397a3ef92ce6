#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gnbg/harness.hpp"

namespace gnbg {

// Baseline optimizers for sanity campaigns; none is meant to be competitive.
// All draw exclusively from the Rng handed to ask, with documented draw
// orders, so runs replay exactly from a seed.

// One uniform point in [lower, upper] per ask (d uniforms, dimension order).
class RandomSearch final : public Optimizer {
 public:
  std::string_view name() const override { return "random"; }
  std::vector<Eigen::VectorXd> ask(Rng& rng, const History& history) override;
  void tell(std::span<const Eigen::VectorXd> points,
            std::span<const double> values) override;

 private:
  // stateless
};

// (1+1) evolution strategy with the one-fifth success rule.
//
// First ask draws the parent uniformly in the box (d uniforms). Every later
// ask proposes parent + step * z with z standard normal per dimension (d
// gaussians, 2d uniforms, dimension order). tell adapts the step:
//   success (child value <= parent value): step *= exp(1/3)
//   failure:                               step *= exp(-1/12)
// so the step is stationary at a one-in-five success rate. The initial step
// is kStepFraction of the mean box width; the step never drops below
// kMinStep.
class OnePlusOneEs final : public Optimizer {
 public:
  static constexpr double kStepFraction = 0.2;
  static constexpr double kMinStep = 1e-14;
  static constexpr double kSuccessFactor = 1.3956124250860895;  // exp(1/3)
  static constexpr double kFailureFactor = 0.9200444146293233;  // exp(-1/12)

  std::string_view name() const override { return "es-1p1"; }
  std::vector<Eigen::VectorXd> ask(Rng& rng, const History& history) override;
  void tell(std::span<const Eigen::VectorXd> points,
            std::span<const double> values) override;

  double step() const { return step_; }

 private:
  bool initialized_ = false;
  bool have_parent_value_ = false;
  Eigen::VectorXd parent_;
  double parent_value_ = 0.0;
  double step_ = 0.0;
};

// Differential evolution, rand/1/bin, population 50, F = 0.5, CR = 0.9.
//
// First ask returns the initial population (point-major, d uniforms each).
// Every later ask builds one trial per parent i, in population order:
//   r1, r2, r3: uniform_int(NP) each, redrawn while colliding with i or an
//               earlier pick (r1 then r2 then r3)
//   jrand:      uniform_int(d)
//   crossover:  one uniform01 per dimension j in order; the trial takes the
//               mutant coordinate when the draw is < CR or j == jrand
// with mutant = x_r1 + F * (x_r2 - x_r3). tell replaces parent i when the
// trial value is <= the parent value.
class DifferentialEvolution final : public Optimizer {
 public:
  static constexpr int kPopulation = 50;
  static constexpr double kF = 0.5;
  static constexpr double kCr = 0.9;

  explicit DifferentialEvolution(int population = kPopulation);

  std::string_view name() const override { return "de"; }
  std::vector<Eigen::VectorXd> ask(Rng& rng, const History& history) override;
  void tell(std::span<const Eigen::VectorXd> points,
            std::span<const double> values) override;

  const std::vector<Eigen::VectorXd>& population() const { return pop_; }
  const std::vector<double>& population_values() const { return pop_values_; }

 private:
  int np_;
  bool initialized_ = false;
  std::vector<Eigen::VectorXd> pop_;
  std::vector<double> pop_values_;
};

// Factory used by the CLI; throws std::invalid_argument listing
// optimizer_names() when the name is unknown.
std::unique_ptr<Optimizer> make_optimizer(const std::string& name);
std::vector<std::string> optimizer_names();

}  // namespace gnbg
