#include "gnbg/optimizers.hpp"

#include <cmath>
#include <stdexcept>

namespace gnbg {

namespace {

Eigen::VectorXd uniform_point(Rng& rng, const Eigen::VectorXd& lower,
                              const Eigen::VectorXd& upper) {
  Eigen::VectorXd x(lower.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(lower[i], upper[i]);
  return x;
}

}  // namespace

std::vector<Eigen::VectorXd> RandomSearch::ask(Rng& rng, const History& history) {
  return {uniform_point(rng, history.lower, history.upper)};
}

void RandomSearch::tell(std::span<const Eigen::VectorXd>, std::span<const double>) {}

std::vector<Eigen::VectorXd> OnePlusOneEs::ask(Rng& rng, const History& history) {
  if (!initialized_) {
    initialized_ = true;
    step_ = kStepFraction * (history.upper - history.lower).mean();
    parent_ = uniform_point(rng, history.lower, history.upper);
    return {parent_};
  }
  Eigen::VectorXd child(parent_.size());
  for (Eigen::Index i = 0; i < child.size(); ++i)
    child[i] = parent_[i] + step_ * rng.gaussian();
  return {child};
}

void OnePlusOneEs::tell(std::span<const Eigen::VectorXd> points,
                        std::span<const double> values) {
  if (points.empty()) return;
  if (!have_parent_value_) {
    // First tell reports the parent itself; no step adaptation.
    parent_ = points.front();
    parent_value_ = values.front();
    have_parent_value_ = true;
    return;
  }
  if (values.front() <= parent_value_) {
    parent_ = points.front();
    parent_value_ = values.front();
    step_ *= kSuccessFactor;
  } else {
    step_ *= kFailureFactor;
  }
  if (step_ < kMinStep) step_ = kMinStep;
}

DifferentialEvolution::DifferentialEvolution(int population) : np_(population) {
  if (np_ < 4)
    throw std::invalid_argument("DifferentialEvolution: population must be >= 4");
}

std::vector<Eigen::VectorXd> DifferentialEvolution::ask(Rng& rng, const History& history) {
  const Eigen::Index d = history.lower.size();
  if (!initialized_) {
    initialized_ = true;
    std::vector<Eigen::VectorXd> init;
    init.reserve(static_cast<std::size_t>(np_));
    for (int i = 0; i < np_; ++i)
      init.push_back(uniform_point(rng, history.lower, history.upper));
    return init;
  }

  // A truncated init can leave fewer than four parents; rand/1 needs four
  // distinct indices, so fall back to uniform proposals in that case.
  if (pop_.size() < 4) return {uniform_point(rng, history.lower, history.upper)};

  std::vector<Eigen::VectorXd> trials;
  trials.reserve(pop_.size());
  const auto np = static_cast<std::uint64_t>(pop_.size());
  for (std::size_t i = 0; i < pop_.size(); ++i) {
    std::size_t r1 = i, r2 = i, r3 = i;
    while (r1 == i) r1 = rng.uniform_int(np);
    while (r2 == i || r2 == r1) r2 = rng.uniform_int(np);
    while (r3 == i || r3 == r1 || r3 == r2) r3 = rng.uniform_int(np);
    const auto jrand = static_cast<Eigen::Index>(rng.uniform_int(static_cast<std::uint64_t>(d)));
    Eigen::VectorXd trial = pop_[i];
    for (Eigen::Index j = 0; j < d; ++j) {
      const double draw = rng.uniform01();
      if (draw < kCr || j == jrand) trial[j] = pop_[r1][j] + kF * (pop_[r2][j] - pop_[r3][j]);
    }
    trials.push_back(std::move(trial));
  }
  return trials;
}

void DifferentialEvolution::tell(std::span<const Eigen::VectorXd> points,
                                 std::span<const double> values) {
  if (pop_.empty()) {
    pop_.assign(points.begin(), points.end());
    pop_values_.assign(values.begin(), values.end());
    return;
  }
  // Budget truncation may deliver fewer trials than parents; compare the
  // prefix pairwise.
  for (std::size_t i = 0; i < points.size() && i < pop_.size(); ++i) {
    if (values[i] <= pop_values_[i]) {
      pop_[i] = points[i];
      pop_values_[i] = values[i];
    }
  }
}

std::unique_ptr<Optimizer> make_optimizer(const std::string& name) {
  if (name == "random") return std::make_unique<RandomSearch>();
  if (name == "es-1p1") return std::make_unique<OnePlusOneEs>();
  if (name == "de") return std::make_unique<DifferentialEvolution>();
  std::string known;
  for (const std::string& n : optimizer_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw std::invalid_argument("unknown optimizer '" + name + "' (available: " + known + ")");
}

std::vector<std::string> optimizer_names() { return {"random", "es-1p1", "de"}; }

}  // namespace gnbg
