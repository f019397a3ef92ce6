#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gnbg/problem.hpp"
#include "gnbg/rng.hpp"

namespace gnbg {

inline constexpr const char* kRunSchema = "gnbg-run/1";

// Default campaign settings; not prescribed by the suite itself, just
// conventional for 30-dimensional problems. Both are plain flags everywhere.
inline constexpr std::int64_t kDefaultMaxEvals = 500000;
inline constexpr double kDefaultSolveThreshold = 1e-8;

struct Budget {
  std::int64_t max_evals;
  double solve_threshold;

  Budget(std::int64_t max_evals_, double solve_threshold_)
      : max_evals(max_evals_), solve_threshold(solve_threshold_) {
    if (max_evals < 1) throw std::invalid_argument("Budget: max_evals must be >= 1");
    if (!(solve_threshold > 0.0))
      throw std::invalid_argument("Budget: solve_threshold must be positive");
  }
};

// What an optimizer may look at when proposing points. The harness owns all
// evaluation accounting; optimizers keep whatever internal state they need
// across ask/tell cycles.
struct History {
  const Eigen::VectorXd& lower;
  const Eigen::VectorXd& upper;
  std::int64_t evals_done;
  std::int64_t evals_remaining;
  double best_value;                 // +inf before the first evaluation
  const Eigen::VectorXd* best_point; // nullptr before the first evaluation
};

// Ask/tell contract: ask returns a non-empty batch of candidate points; the
// harness clamps them into the box, evaluates, and hands the clamped points
// back through tell together with their objective values. When the budget or
// the solve threshold cuts a batch short, tell receives only the evaluated
// prefix. ask is never called again after the run ends.
class Optimizer {
 public:
  virtual ~Optimizer() = default;
  virtual std::string_view name() const = 0;
  virtual std::vector<Eigen::VectorXd> ask(Rng& rng, const History& history) = 0;
  virtual void tell(std::span<const Eigen::VectorXd> points,
                    std::span<const double> values) = 0;
};

struct TrajectoryPoint {
  std::int64_t eval;
  double error;
};

// One optimizer run. final_error is best objective value found minus the
// instance's known sigma_min; the trajectory samples best-so-far error at the
// 1-2-5 decade checkpoints plus the final evaluation.
struct RunRecord {
  int instance_id = 0;
  std::string optimizer;
  std::uint64_t run_seed = 0;
  std::int64_t max_evals = 0;
  double solve_threshold = 0.0;
  std::int64_t evals_used = 0;
  double final_error = 0.0;
  bool solved = false;
  std::vector<TrajectoryPoint> trajectory;
};

// Checkpoint evaluation indices 1, 2, 5, 10, 20, 50, ... up to max_evals.
std::vector<std::int64_t> checkpoint_schedule(std::int64_t max_evals);

// Drives the optimizer until the budget is exhausted or the error drops
// below the solve threshold. Every candidate is clamped into the instance
// bounds before evaluation; a NaN candidate is rejected with an error.
// Deterministic given (optimizer, instance, budget, run_seed).
RunRecord run(Optimizer& optimizer, const Instanced& inst, const Budget& budget,
              std::uint64_t run_seed);

// Aggregate statistics per (instance, optimizer) group. Standard deviation
// uses the n-1 divisor (0 when a group has a single run); the median of an
// even-sized group is the mean of the two middle values. mean_evals_to_solve
// averages over solved runs only and is NaN when none solved.
struct ResultRow {
  int instance_id = 0;
  std::string optimizer;
  std::int64_t runs = 0;
  double mean_error = 0.0;
  double median_error = 0.0;
  double std_error = 0.0;
  double solve_rate = 0.0;
  double mean_evals_to_solve = 0.0;
};

struct ResultTable {
  std::vector<ResultRow> rows;  // sorted by (instance_id, optimizer)
};

ResultTable aggregate(const std::vector<RunRecord>& records);

void write_run_record(const RunRecord& rec, std::ostream& os);
void write_run_record(const RunRecord& rec, const std::filesystem::path& path);
RunRecord read_run_record(std::istream& is);
RunRecord read_run_record(const std::filesystem::path& path);

// CSV columns, in order: instance_id, optimizer, runs, mean_error,
// median_error, std_error, solve_rate, mean_evals_to_solve.
void write_csv(const ResultTable& table, std::ostream& os);
// Plain aligned table for terminals.
void write_plain_table(const ResultTable& table, std::ostream& os);

}  // namespace gnbg
