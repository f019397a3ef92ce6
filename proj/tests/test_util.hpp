#pragma once

// Shared helpers for unit and acceptance tests: random low-dimensional
// instances built directly from library types, plus conversion into the
// independent oracle's representation.

#include <Eigen/Core>

#include <numbers>

#include "gnbg/problem.hpp"
#include "gnbg/rng.hpp"
#include "gnbg/rotation.hpp"

#include "oracle.hpp"

namespace testutil {

inline Eigen::MatrixXd random_theta(int d, gnbg::Rng& rng) {
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(d, d);
  for (int p = 0; p < d - 1; ++p)
    for (int q = p + 1; q < d; ++q)
      theta(p, q) = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return theta;
}

inline gnbg::Componentd random_component(int d, gnbg::Rng& rng) {
  gnbg::Componentd c;
  c.center = Eigen::VectorXd::NullaryExpr(d, [&](Eigen::Index) { return rng.uniform(-80.0, 80.0); });
  c.floor = rng.uniform(-1200.0, 0.0);
  c.h_diag = Eigen::VectorXd::NullaryExpr(d, [&](Eigen::Index) { return rng.uniform(0.1, 100.0); });
  c.theta = random_theta(d, rng);
  c.rotation = gnbg::build_rotation(c.theta);
  c.lambda = rng.uniform(0.05, 1.5);
  c.mu = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
  for (auto& w : c.omega) w = rng.uniform(0.0, 60.0);
  return c;
}

inline gnbg::Instanced random_instance(int d, int n_components, gnbg::Rng& rng) {
  gnbg::Instanced inst;
  inst.dim = d;
  inst.lower = Eigen::VectorXd::Constant(d, -100.0);
  inst.upper = Eigen::VectorXd::Constant(d, 100.0);
  inst.instance_id = 0;
  inst.seed = 0;
  for (int k = 0; k < n_components; ++k) inst.components.push_back(random_component(d, rng));
  return inst;
}

inline oracle::Component to_oracle(const gnbg::Componentd& c) {
  const auto d = static_cast<std::size_t>(c.dim());
  oracle::Component out;
  out.center.resize(d);
  out.h.resize(d);
  out.rotation.assign(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    out.center[i] = c.center[static_cast<Eigen::Index>(i)];
    out.h[i] = c.h_diag[static_cast<Eigen::Index>(i)];
    for (std::size_t j = 0; j < d; ++j)
      out.rotation[i][j] = c.rotation(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  out.sigma = c.floor;
  out.lambda = c.lambda;
  out.mu1 = c.mu[0];
  out.mu2 = c.mu[1];
  out.w1 = c.omega[0];
  out.w2 = c.omega[1];
  out.w3 = c.omega[2];
  out.w4 = c.omega[3];
  return out;
}

inline std::vector<oracle::Component> to_oracle(const gnbg::Instanced& inst) {
  std::vector<oracle::Component> out;
  for (const auto& c : inst.components) out.push_back(to_oracle(c));
  return out;
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

// |a - b| <= tol * max(1, |a|, |b|)
inline bool close_rel(double a, double b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace testutil
