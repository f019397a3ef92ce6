#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "gnbg/evaluate.hpp"
#include "gnbg/grid.hpp"
#include "gnbg/harness.hpp"
#include "gnbg/instance_io.hpp"
#include "gnbg/optimizers.hpp"
#include "gnbg/suite.hpp"

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

int cmd_generate(int id, std::uint64_t seed, const std::string& out) {
  const gnbg::Instanced inst = gnbg::make_instance(id, seed);
  gnbg::write_instance(inst, fs::path(out));
  const Eigen::Index best = gnbg::optimum_component(inst);
  const gnbg::Componentd& c = inst.components[static_cast<std::size_t>(best)];
  std::cout << "wrote " << out << '\n';
  std::cout << "sigma_min = " << fmt(c.floor) << " (component " << best + 1 << " of "
            << inst.components.size() << ")\n";
  std::cout << "optimum center =";
  for (Eigen::Index i = 0; i < c.center.size(); ++i) std::cout << ' ' << fmt(c.center[i]);
  std::cout << '\n';
  return 0;
}

int cmd_eval(const std::string& instance_path, const std::vector<double>& coords) {
  const gnbg::Instanced inst = gnbg::read_instance(fs::path(instance_path));
  if (static_cast<Eigen::Index>(coords.size()) != inst.dim)
    throw std::invalid_argument("point has " + std::to_string(coords.size()) +
                                " coordinates, instance dimension is " +
                                std::to_string(inst.dim));
  Eigen::VectorXd x(inst.dim);
  for (Eigen::Index i = 0; i < inst.dim; ++i) x[i] = coords[static_cast<std::size_t>(i)];
  const auto result = gnbg::evaluate(x, inst);
  std::cout << "f = " << fmt(result.value) << " (component " << result.winner + 1 << " of "
            << inst.components.size() << ")\n";
  return 0;
}

std::string run_file_name(int id, const std::string& algo, std::uint64_t seed, int run_idx) {
  std::ostringstream ss;
  ss << 'f' << std::setw(2) << std::setfill('0') << id << '_' << algo << "_s" << seed
     << "_r" << std::setw(3) << std::setfill('0') << run_idx << ".json";
  return ss.str();
}

bool record_is_complete(const fs::path& path, int id, const std::string& algo,
                        std::uint64_t run_seed, const gnbg::Budget& budget) {
  if (!fs::exists(path)) return false;
  try {
    const gnbg::RunRecord rec = gnbg::read_run_record(path);
    return rec.instance_id == id && rec.optimizer == algo && rec.run_seed == run_seed &&
           rec.max_evals == budget.max_evals &&
           rec.solve_threshold == budget.solve_threshold;
  } catch (const std::exception&) {
    return false;  // unreadable or mismatched: recompute
  }
}

int cmd_run(const std::vector<int>& ids, const std::string& algo, int runs,
            std::int64_t max_evals, double threshold, std::uint64_t seed,
            const std::string& out_dir, int jobs) {
  gnbg::make_optimizer(algo);  // fail fast on unknown names
  const gnbg::Budget budget(max_evals, threshold);
  fs::create_directories(out_dir);

  struct Job {
    int id;
    int run_idx;
    fs::path path;
    std::uint64_t run_seed;
  };
  std::vector<Job> jobs_list;
  std::vector<std::string> log(static_cast<std::size_t>(runs) * ids.size());
  std::size_t log_idx = 0;
  for (const int id : ids) {
    const gnbg::Instanced probe = gnbg::make_instance(id, seed);  // validates id
    (void)probe;
    for (int r = 0; r < runs; ++r, ++log_idx) {
      const fs::path path = fs::path(out_dir) / run_file_name(id, algo, seed, r);
      const std::uint64_t run_seed =
          gnbg::Rng::mix(seed, static_cast<std::uint64_t>(id) * 1000003ULL +
                                   static_cast<std::uint64_t>(r));
      if (record_is_complete(path, id, algo, run_seed, budget)) {
        log[log_idx] = "skip  " + path.filename().string() + " (complete)";
      } else {
        jobs_list.push_back({id, r, path, run_seed});
        log[log_idx].clear();
      }
    }
  }

  // Runs are independent; instances are built per worker and shared nowhere.
  std::mutex log_mutex;
  std::map<std::pair<int, int>, std::string> done_log;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs_list.size() || failed.load()) return;
      const Job& job = jobs_list[i];
      try {
        const gnbg::Instanced inst = gnbg::make_instance(job.id, seed);
        const auto optimizer = gnbg::make_optimizer(algo);
        const gnbg::RunRecord rec = gnbg::run(*optimizer, inst, budget, job.run_seed);
        gnbg::write_run_record(rec, job.path);
        std::ostringstream line;
        line << "run   " << job.path.filename().string() << " error=" << fmt(rec.final_error)
             << " evals=" << rec.evals_used << (rec.solved ? " solved" : "");
        const std::lock_guard<std::mutex> lock(log_mutex);
        done_log[{job.id, job.run_idx}] = line.str();
      } catch (const std::exception& e) {
        const std::lock_guard<std::mutex> lock(log_mutex);
        if (!failed.exchange(true)) first_error = e.what();
        return;
      }
    }
  };

  const int n_workers = std::max(1, std::min<int>(jobs, static_cast<int>(jobs_list.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::runtime_error(first_error);

  // Emit the log in (id, run) order regardless of worker scheduling.
  log_idx = 0;
  for (const int id : ids)
    for (int r = 0; r < runs; ++r, ++log_idx) {
      if (log[log_idx].empty()) log[log_idx] = done_log.at({id, r});
      std::cout << log[log_idx] << '\n';
    }
  return 0;
}

int cmd_report(const std::string& in_dir, const std::string& format,
               const std::string& out) {
  std::vector<gnbg::RunRecord> records;
  std::vector<fs::path> paths;
  if (!fs::is_directory(in_dir))
    throw std::runtime_error("not a directory: " + in_dir);
  for (const auto& entry : fs::directory_iterator(in_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const fs::path& p : paths) {
    try {
      records.push_back(gnbg::read_run_record(p));
    } catch (const std::exception&) {
      // not a run record; ignore
    }
  }
  if (records.empty())
    throw std::runtime_error("no run records found in " + in_dir);

  const gnbg::ResultTable table = gnbg::aggregate(records);
  const auto emit = [&](std::ostream& os) {
    if (format == "csv")
      gnbg::write_csv(table, os);
    else
      gnbg::write_plain_table(table, os);
  };
  if (out.empty()) {
    emit(std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open for writing: " + out);
    emit(os);
  }
  return 0;
}

int cmd_grid(int id, std::uint64_t seed, bool figure_mode, const std::string& instance_path,
             std::vector<int> dims, std::vector<int> res, std::vector<double> fixed,
             const std::string& out) {
  gnbg::Instanced inst;
  if (!instance_path.empty()) {
    if (figure_mode)
      throw std::invalid_argument("--figure-mode applies to --id, not --instance");
    inst = gnbg::read_instance(fs::path(instance_path));
  } else if (id > 0) {
    inst = figure_mode ? gnbg::make_figure_instance(id, seed)
                       : gnbg::make_instance(id, seed);
  } else {
    throw std::invalid_argument("need --id or --instance");
  }

  if (dims.empty()) dims = {0, 1};
  if (dims.size() != 2)
    throw std::invalid_argument("--dims needs exactly two indices");
  if (res.empty()) res = {256};
  if (res.size() == 1) res.push_back(res[0]);
  if (res.size() != 2) throw std::invalid_argument("--res needs one or two values");

  Eigen::VectorXd fixed_point;
  if (fixed.empty()) {
    // Slice through the global optimum by default.
    fixed_point =
        inst.components[static_cast<std::size_t>(gnbg::optimum_component(inst))].center;
  } else {
    if (static_cast<Eigen::Index>(fixed.size()) != inst.dim)
      throw std::invalid_argument("--fixed needs one value per instance dimension");
    fixed_point = Eigen::Map<const Eigen::VectorXd>(fixed.data(),
                                                    static_cast<Eigen::Index>(fixed.size()));
  }

  gnbg::GridExport grid =
      gnbg::compute_grid(inst, dims[0], dims[1], fixed_point, res[0], res[1]);
  grid.figure_mode = figure_mode;
  gnbg::write_grid(grid, fs::path(out));
  std::cout << "wrote " << out << " (" << res[0] << 'x' << res[1] << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GNBG benchmark suite: instance generation, evaluation, and campaigns"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Build a suite instance and write it to a file");
  int gen_id = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  generate->add_option("--id", gen_id, "instance id (1..24)")->required();
  generate->add_option("--seed", gen_seed, "construction seed");
  generate->add_option("--out", gen_out, "output path")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate an instance file at a point");
  std::string eval_instance;
  std::vector<double> eval_point;
  eval->add_option("instance", eval_instance, "instance file")->required();
  eval->add_option("point", eval_point, "point coordinates")->required()->expected(-1);

  // run
  auto* runc = app.add_subcommand("run", "Run an optimizer campaign, one record file per run");
  std::vector<int> run_ids;
  std::string run_algo = "random";
  int run_runs = 1;
  std::int64_t run_budget = gnbg::kDefaultMaxEvals;
  double run_threshold = gnbg::kDefaultSolveThreshold;
  std::uint64_t run_seed = 1;
  std::string run_out = "runs";
  int run_jobs = 1;
  runc->add_option("--id", run_ids, "instance ids (repeat or comma-separate)")
      ->required()
      ->delimiter(',');
  runc->add_option("--algo", run_algo, "optimizer name");
  runc->add_option("--runs", run_runs, "repetitions per instance")->check(CLI::PositiveNumber);
  runc->add_option("--budget", run_budget, "max objective evaluations per run");
  runc->add_option("--threshold", run_threshold, "absolute error counted as solved");
  runc->add_option("--seed", run_seed, "instance seed; run seeds derive from it");
  runc->add_option("--out", run_out, "output directory");
  runc->add_option("--jobs", run_jobs, "parallel workers")->check(CLI::PositiveNumber);

  // report
  auto* report = app.add_subcommand("report", "Aggregate run records into a table");
  std::string rep_in = "runs";
  std::string rep_format = "table";
  std::string rep_out;
  report->add_option("--in", rep_in, "directory of run record files");
  report->add_option("--format", rep_format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));
  report->add_option("--out", rep_out, "write to file instead of stdout");

  // grid
  auto* gridc = app.add_subcommand("grid", "Export a 2-D landscape slice as a text matrix");
  int grid_id = 0;
  std::uint64_t grid_seed = 1;
  bool grid_figure = false;
  std::string grid_instance;
  std::vector<int> grid_dims;
  std::vector<int> grid_res;
  std::vector<double> grid_fixed;
  std::string grid_out;
  gridc->add_option("--id", grid_id, "instance id (1..24)");
  gridc->add_option("--seed", grid_seed, "construction seed");
  gridc->add_flag("--figure-mode", grid_figure,
                  "rebuild at d=2 with floors 0 and centers at the origin");
  gridc->add_option("--instance", grid_instance, "use an instance file instead of --id");
  gridc->add_option("--dims", grid_dims, "two active dimensions (default 0,1)")->delimiter(',');
  gridc->add_option("--res", grid_res, "nodes per axis (one or two values, default 256)")
      ->delimiter(',');
  gridc->add_option("--fixed", grid_fixed, "values for inactive dimensions")->delimiter(',');
  gridc->add_option("--out", grid_out, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(gen_id, gen_seed, gen_out);
    if (*eval) return cmd_eval(eval_instance, eval_point);
    if (*runc)
      return cmd_run(run_ids, run_algo, run_runs, run_budget, run_threshold, run_seed,
                     run_out, run_jobs);
    if (*report) return cmd_report(rep_in, rep_format, rep_out);
    if (*gridc)
      return cmd_grid(grid_id, grid_seed, grid_figure, grid_instance, grid_dims, grid_res,
                      grid_fixed, grid_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
