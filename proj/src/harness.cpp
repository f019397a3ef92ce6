#include "gnbg/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "gnbg/evaluate.hpp"

namespace gnbg {

using nlohmann::json;

std::vector<std::int64_t> checkpoint_schedule(std::int64_t max_evals) {
  std::vector<std::int64_t> cps;
  for (std::int64_t base = 1;; base *= 10) {
    for (const std::int64_t m : {1, 2, 5}) {
      if (base > std::numeric_limits<std::int64_t>::max() / m) return cps;
      const std::int64_t v = base * m;
      if (v > max_evals) return cps;
      cps.push_back(v);
    }
    if (base > std::numeric_limits<std::int64_t>::max() / 10) return cps;
  }
}

RunRecord run(Optimizer& optimizer, const Instanced& inst, const Budget& budget,
              std::uint64_t run_seed) {
  Rng rng(run_seed);
  RunRecord rec;
  rec.instance_id = inst.instance_id;
  rec.optimizer = std::string(optimizer.name());
  rec.run_seed = run_seed;
  rec.max_evals = budget.max_evals;
  rec.solve_threshold = budget.solve_threshold;

  const double target = sigma_min(inst);
  const std::vector<std::int64_t> checkpoints = checkpoint_schedule(budget.max_evals);
  std::size_t next_cp = 0;

  double best_value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_point;
  std::int64_t evals = 0;
  bool solved = false;

  std::vector<Eigen::VectorXd> evaluated;
  std::vector<double> values;
  while (evals < budget.max_evals && !solved) {
    const History history{inst.lower,
                          inst.upper,
                          evals,
                          budget.max_evals - evals,
                          best_value,
                          best_point.size() > 0 ? &best_point : nullptr};
    std::vector<Eigen::VectorXd> batch = optimizer.ask(rng, history);
    if (batch.empty()) throw std::runtime_error("run: optimizer returned an empty batch");

    // A batch reaching past the budget is truncated; only the evaluated
    // prefix is reported back.
    if (static_cast<std::int64_t>(batch.size()) > budget.max_evals - evals)
      batch.resize(static_cast<std::size_t>(budget.max_evals - evals));

    evaluated.clear();
    values.clear();
    for (Eigen::VectorXd& x : batch) {
      if (x.size() != inst.dim)
        throw std::invalid_argument("run: candidate dimension mismatch");
      if (!x.allFinite())
        throw std::invalid_argument("run: optimizer proposed a non-finite candidate");
      Eigen::VectorXd clamped = x.cwiseMax(inst.lower).cwiseMin(inst.upper);
      const double value = evaluate(clamped, inst).value;
      ++evals;
      if (value < best_value) {
        best_value = value;
        best_point = clamped;
      }
      while (next_cp < checkpoints.size() && checkpoints[next_cp] == evals) {
        rec.trajectory.push_back({evals, best_value - target});
        ++next_cp;
      }
      evaluated.push_back(std::move(clamped));
      values.push_back(value);
      if (best_value - target < budget.solve_threshold) {
        solved = true;
        break;
      }
    }
    optimizer.tell(evaluated, values);
  }

  rec.evals_used = evals;
  rec.final_error = best_value - target;
  rec.solved = solved;
  if (rec.trajectory.empty() || rec.trajectory.back().eval != evals)
    rec.trajectory.push_back({evals, rec.final_error});
  return rec;
}

ResultTable aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("aggregate: no records");

  std::map<std::pair<int, std::string>, std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : records) groups[{r.instance_id, r.optimizer}].push_back(&r);

  ResultTable table;
  for (const auto& [key, group] : groups) {
    std::vector<double> errors;
    errors.reserve(group.size());
    double evals_to_solve = 0.0;
    std::int64_t solved = 0;
    for (const RunRecord* r : group) {
      errors.push_back(r->final_error);
      if (r->solved) {
        ++solved;
        evals_to_solve += static_cast<double>(r->evals_used);
      }
    }
    const auto n = static_cast<double>(errors.size());
    const double mean = std::accumulate(errors.begin(), errors.end(), 0.0) / n;
    double var = 0.0;
    for (const double e : errors) var += (e - mean) * (e - mean);
    const double stddev = errors.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
    std::sort(errors.begin(), errors.end());
    const std::size_t mid = errors.size() / 2;
    const double median = errors.size() % 2 == 1
                              ? errors[mid]
                              : 0.5 * (errors[mid - 1] + errors[mid]);

    ResultRow row;
    row.instance_id = key.first;
    row.optimizer = key.second;
    row.runs = static_cast<std::int64_t>(group.size());
    row.mean_error = mean;
    row.median_error = median;
    row.std_error = stddev;
    row.solve_rate = static_cast<double>(solved) / n;
    row.mean_evals_to_solve = solved > 0 ? evals_to_solve / static_cast<double>(solved)
                                         : std::numeric_limits<double>::quiet_NaN();
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_run_record(const RunRecord& rec, std::ostream& os) {
  json doc;
  doc["schema"] = kRunSchema;
  doc["instance_id"] = rec.instance_id;
  doc["optimizer"] = rec.optimizer;
  doc["run_seed"] = rec.run_seed;
  doc["max_evals"] = rec.max_evals;
  doc["solve_threshold"] = rec.solve_threshold;
  doc["evals_used"] = rec.evals_used;
  doc["final_error"] = rec.final_error;
  doc["solved"] = rec.solved;
  json traj = json::array();
  for (const TrajectoryPoint& p : rec.trajectory)
    traj.push_back(json::array({p.eval, p.error}));
  doc["trajectory"] = std::move(traj);
  os << doc.dump(2) << '\n';
}

void write_run_record(const RunRecord& rec, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  write_run_record(rec, os);
  if (!os.good()) throw std::runtime_error("write failed: " + path.string());
}

namespace {

[[noreturn]] void fail_run(const std::string& field, const std::string& why) {
  throw std::runtime_error("run file: field '" + field + "': " + why);
}

const json& get_field(const json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end()) fail_run(field, "missing");
  return *it;
}

}  // namespace

RunRecord read_run_record(std::istream& is) {
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("run file: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("run file: top level must be an object");
  const json& schema = get_field(doc, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kRunSchema)
    fail_run("schema", std::string("expected \"") + kRunSchema + "\"");

  RunRecord rec;
  rec.instance_id = get_field(doc, "instance_id").get<int>();
  rec.optimizer = get_field(doc, "optimizer").get<std::string>();
  rec.run_seed = get_field(doc, "run_seed").get<std::uint64_t>();
  rec.max_evals = get_field(doc, "max_evals").get<std::int64_t>();
  rec.solve_threshold = get_field(doc, "solve_threshold").get<double>();
  rec.evals_used = get_field(doc, "evals_used").get<std::int64_t>();
  rec.final_error = get_field(doc, "final_error").get<double>();
  rec.solved = get_field(doc, "solved").get<bool>();
  const json& traj = get_field(doc, "trajectory");
  if (!traj.is_array()) fail_run("trajectory", "expected an array");
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const json& p = traj[i];
    if (!p.is_array() || p.size() != 2)
      fail_run("trajectory", "entry " + std::to_string(i) + " must be [eval, error]");
    rec.trajectory.push_back({p[0].get<std::int64_t>(), p[1].get<double>()});
  }
  if (rec.evals_used < 0 || rec.evals_used > rec.max_evals)
    fail_run("evals_used", "outside [0, max_evals]");
  for (std::size_t i = 1; i < rec.trajectory.size(); ++i)
    if (rec.trajectory[i].error > rec.trajectory[i - 1].error)
      fail_run("trajectory", "best-so-far error must be nonincreasing");
  return rec;
}

RunRecord read_run_record(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
  return read_run_record(is);
}

namespace {

std::string num(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

}  // namespace

void write_csv(const ResultTable& table, std::ostream& os) {
  os << "instance_id,optimizer,runs,mean_error,median_error,std_error,solve_rate,"
        "mean_evals_to_solve\n";
  for (const ResultRow& r : table.rows) {
    os << r.instance_id << ',' << r.optimizer << ',' << r.runs << ',' << num(r.mean_error)
       << ',' << num(r.median_error) << ',' << num(r.std_error) << ','
       << num(r.solve_rate) << ',' << num(r.mean_evals_to_solve) << '\n';
  }
}

void write_plain_table(const ResultTable& table, std::ostream& os) {
  os << std::left << std::setw(4) << "id" << std::setw(12) << "optimizer" << std::right
     << std::setw(6) << "runs" << std::setw(14) << "mean_err" << std::setw(14)
     << "median_err" << std::setw(14) << "std_err" << std::setw(12) << "solve_rate"
     << std::setw(16) << "evals_to_solve" << '\n';
  for (const ResultRow& r : table.rows) {
    os << std::left << std::setw(4) << r.instance_id << std::setw(12) << r.optimizer
       << std::right << std::setw(6) << r.runs << std::setw(14) << std::setprecision(4)
       << std::scientific << r.mean_error << std::setw(14) << r.median_error
       << std::setw(14) << r.std_error << std::setw(12) << std::defaultfloat
       << r.solve_rate << std::setw(16) << r.mean_evals_to_solve << '\n';
  }
}

}  // namespace gnbg
