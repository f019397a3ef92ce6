#include <doctest.h>

#include <algorithm>
#include <limits>
#include <sstream>

#include "gnbg/evaluate.hpp"
#include "gnbg/harness.hpp"
#include "gnbg/optimizers.hpp"
#include "gnbg/suite.hpp"

using gnbg::Budget;
using gnbg::History;
using gnbg::Optimizer;
using gnbg::RunRecord;

namespace {

// Proposes the same fixed point forever.
class FixedPoint final : public Optimizer {
 public:
  explicit FixedPoint(Eigen::VectorXd x) : x_(std::move(x)) {}
  std::string_view name() const override { return "fixed"; }
  std::vector<Eigen::VectorXd> ask(gnbg::Rng&, const History&) override { return {x_}; }
  void tell(std::span<const Eigen::VectorXd>, std::span<const double>) override {}

 private:
  Eigen::VectorXd x_;
};

// Asks for a huge batch to exercise budget truncation.
class GreedyBatch final : public Optimizer {
 public:
  explicit GreedyBatch(Eigen::Index dim) : dim_(dim) {}
  std::string_view name() const override { return "greedy"; }
  std::vector<Eigen::VectorXd> ask(gnbg::Rng& rng, const History& history) override {
    std::vector<Eigen::VectorXd> batch;
    for (int i = 0; i < 1000; ++i) {
      Eigen::VectorXd x(dim_);
      for (Eigen::Index j = 0; j < dim_; ++j)
        x[j] = rng.uniform(history.lower[j], history.upper[j]);
      batch.push_back(std::move(x));
    }
    return batch;
  }
  void tell(std::span<const Eigen::VectorXd> points, std::span<const double>) override {
    told += static_cast<int>(points.size());
  }
  int told = 0;

 private:
  Eigen::Index dim_;
};

class NanProposer final : public Optimizer {
 public:
  std::string_view name() const override { return "nan"; }
  std::vector<Eigen::VectorXd> ask(gnbg::Rng&, const History& history) override {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(history.lower.size());
    x[0] = std::numeric_limits<double>::quiet_NaN();
    return {x};
  }
  void tell(std::span<const Eigen::VectorXd>, std::span<const double>) override {}
};

// Always proposes points far outside the box; used for the clamping check.
class OutOfBox final : public Optimizer {
 public:
  std::string_view name() const override { return "outside"; }
  std::vector<Eigen::VectorXd> ask(gnbg::Rng&, const History& history) override {
    return {Eigen::VectorXd::Constant(history.lower.size(), 1e6)};
  }
  void tell(std::span<const Eigen::VectorXd> points, std::span<const double>) override {
    seen.insert(seen.end(), points.begin(), points.end());
  }
  std::vector<Eigen::VectorXd> seen;
};

}  // namespace

TEST_CASE("budget invariants are enforced at construction") {
  CHECK_THROWS_AS(Budget(0, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(Budget(-5, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(Budget(10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Budget(10, -1.0), std::invalid_argument);
  CHECK_NOTHROW(Budget(1, 1e-8));
}

TEST_CASE("checkpoint schedule is the 1-2-5 decades") {
  CHECK(gnbg::checkpoint_schedule(100) ==
        std::vector<std::int64_t>{1, 2, 5, 10, 20, 50, 100});
  CHECK(gnbg::checkpoint_schedule(3) == std::vector<std::int64_t>{1, 2});
  CHECK(gnbg::checkpoint_schedule(1) == std::vector<std::int64_t>{1});
}

TEST_CASE("proposing the optimum solves at the first evaluation") {
  const auto inst = gnbg::make_instance(16, 3);
  const auto best = gnbg::optimum_component(inst);
  FixedPoint opt(inst.components[static_cast<std::size_t>(best)].center);
  const RunRecord rec = gnbg::run(opt, inst, Budget(1000, 1e-8), 1);
  CHECK(rec.solved);
  CHECK(rec.evals_used == 1);
  CHECK(rec.final_error == 0.0);
  CHECK(rec.trajectory.size() == 1);
  CHECK(rec.trajectory[0].eval == 1);
}

TEST_CASE("random search is reproducible by replaying the draws") {
  const auto inst = gnbg::make_instance(1, 7);
  gnbg::RandomSearch rs;
  const RunRecord rec = gnbg::run(rs, inst, Budget(10, 1e-8), 99);
  CHECK(rec.evals_used == 10);

  // Re-derive the same ten points straight from the Rng contract.
  gnbg::Rng rng(99);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 10; ++k) {
    Eigen::VectorXd x(inst.dim);
    for (Eigen::Index i = 0; i < inst.dim; ++i)
      x[i] = rng.uniform(inst.lower[i], inst.upper[i]);
    best = std::min(best, gnbg::evaluate(x, inst).value);
  }
  CHECK(rec.final_error == best - gnbg::sigma_min(inst));

  // And the records themselves are identical across reruns.
  gnbg::RandomSearch rs2;
  const RunRecord rec2 = gnbg::run(rs2, inst, Budget(10, 1e-8), 99);
  CHECK(rec.final_error == rec2.final_error);
  CHECK(rec.evals_used == rec2.evals_used);
}

TEST_CASE("trajectories are nonincreasing and end at evals_used") {
  const auto inst = gnbg::make_instance(2, 5);
  gnbg::RandomSearch rs;
  const RunRecord rec = gnbg::run(rs, inst, Budget(5000, 1e-12), 11);
  CHECK(rec.evals_used == 5000);
  CHECK(rec.final_error >= 0.0);
  REQUIRE(!rec.trajectory.empty());
  for (std::size_t i = 1; i < rec.trajectory.size(); ++i) {
    CHECK(rec.trajectory[i].error <= rec.trajectory[i - 1].error);
    CHECK(rec.trajectory[i].eval > rec.trajectory[i - 1].eval);
  }
  CHECK(rec.trajectory.back().eval == rec.evals_used);
  CHECK(rec.trajectory.back().error == rec.final_error);
}

TEST_CASE("oversized batches are truncated exactly at the budget") {
  const auto inst = gnbg::make_instance(1, 7);
  GreedyBatch opt(inst.dim);
  const RunRecord rec = gnbg::run(opt, inst, Budget(137, 1e-12), 5);
  CHECK(rec.evals_used == 137);
  CHECK(opt.told == 137);
}

TEST_CASE("NaN candidates are rejected with an error") {
  const auto inst = gnbg::make_instance(1, 7);
  NanProposer opt;
  CHECK_THROWS_AS(gnbg::run(opt, inst, Budget(10, 1e-8), 1), std::invalid_argument);
}

TEST_CASE("every evaluated point is clamped into the box") {
  const auto inst = gnbg::make_instance(1, 7);
  OutOfBox opt;
  const RunRecord rec = gnbg::run(opt, inst, Budget(3, 1e-12), 1);
  CHECK(rec.evals_used == 3);
  REQUIRE(opt.seen.size() == 3);
  for (const auto& p : opt.seen) {
    CHECK((p.array() >= inst.lower.array()).all());
    CHECK((p.array() <= inst.upper.array()).all());
    CHECK((p.array() == 100.0).all());  // clamp of +1e6
  }
}

TEST_CASE("aggregate computes the documented statistics") {
  RunRecord a;
  a.instance_id = 1;
  a.optimizer = "x";
  a.final_error = 1.0;
  a.solved = true;
  a.evals_used = 10;
  RunRecord b = a;
  b.final_error = 2.0;
  b.solved = false;
  b.evals_used = 20;
  RunRecord c = a;
  c.final_error = 3.0;
  c.solved = true;
  c.evals_used = 30;

  const auto table = gnbg::aggregate({a, b, c});
  REQUIRE(table.rows.size() == 1);
  const auto& row = table.rows[0];
  CHECK(row.runs == 3);
  CHECK(row.mean_error == doctest::Approx(2.0));
  CHECK(row.median_error == doctest::Approx(2.0));
  CHECK(row.std_error == doctest::Approx(1.0));  // sample std, n-1 divisor
  CHECK(row.solve_rate == doctest::Approx(2.0 / 3.0));
  CHECK(row.mean_evals_to_solve == doctest::Approx(20.0));

  // 31 identical zero-error records: degenerate statistics stay exact.
  std::vector<RunRecord> zeros(31, a);
  for (auto& r : zeros) r.final_error = 0.0;
  const auto ztable = gnbg::aggregate(zeros);
  CHECK(ztable.rows[0].mean_error == 0.0);
  CHECK(ztable.rows[0].std_error == 0.0);
  CHECK(ztable.rows[0].solve_rate == 1.0);

  CHECK_THROWS_AS(gnbg::aggregate({}), std::invalid_argument);
}

TEST_CASE("median of an even group averages the middle pair") {
  RunRecord a;
  a.instance_id = 2;
  a.optimizer = "x";
  std::vector<RunRecord> recs;
  for (const double e : {4.0, 1.0, 3.0, 2.0}) {
    a.final_error = e;
    recs.push_back(a);
  }
  CHECK(gnbg::aggregate(recs).rows[0].median_error == doctest::Approx(2.5));
}

TEST_CASE("run records round-trip bit-exactly and reject corruption") {
  const auto inst = gnbg::make_instance(1, 7);
  gnbg::RandomSearch rs;
  const RunRecord rec = gnbg::run(rs, inst, Budget(100, 1e-8), 12345);

  std::stringstream ss;
  gnbg::write_run_record(rec, ss);
  const std::string text = ss.str();
  const RunRecord back = gnbg::read_run_record(ss);
  CHECK(back.instance_id == rec.instance_id);
  CHECK(back.optimizer == rec.optimizer);
  CHECK(back.run_seed == rec.run_seed);
  CHECK(back.evals_used == rec.evals_used);
  CHECK(back.final_error == rec.final_error);
  CHECK(back.solved == rec.solved);
  REQUIRE(back.trajectory.size() == rec.trajectory.size());
  for (std::size_t i = 0; i < rec.trajectory.size(); ++i) {
    CHECK(back.trajectory[i].eval == rec.trajectory[i].eval);
    CHECK(back.trajectory[i].error == rec.trajectory[i].error);
  }

  std::stringstream ss2;
  gnbg::write_run_record(back, ss2);
  CHECK(ss2.str() == text);

  auto corrupted = text;
  corrupted.replace(corrupted.find("gnbg-run/1"), 10, "gnbg-run/9");
  std::stringstream bad(corrupted);
  CHECK_THROWS_AS(gnbg::read_run_record(bad), std::runtime_error);
}

TEST_CASE("csv export uses the fixed column order") {
  RunRecord a;
  a.instance_id = 4;
  a.optimizer = "random";
  a.final_error = 0.5;
  a.solved = false;
  a.evals_used = 100;
  const auto table = gnbg::aggregate({a});
  std::ostringstream os;
  gnbg::write_csv(table, os);
  const std::string out = os.str();
  CHECK(out.find("instance_id,optimizer,runs,mean_error,median_error,std_error,"
                 "solve_rate,mean_evals_to_solve\n") == 0);
  CHECK(out.find("4,random,1,0.5,0.5,0,0,nan") != std::string::npos);
}
