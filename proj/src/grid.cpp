#include "gnbg/grid.hpp"

#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "gnbg/evaluate.hpp"
#include "gnbg/sampling.hpp"

namespace gnbg {

GridExport compute_grid(const Instanced& inst, int dim_a, int dim_b,
                        const Eigen::VectorXd& fixed_point, int res_a, int res_b) {
  const auto d = static_cast<int>(inst.dim);
  if (res_a < 2 || res_b < 2)
    throw std::invalid_argument("compute_grid: resolution must be >= 2");
  if (dim_a < 0 || dim_a >= d || dim_b < 0 || dim_b >= d || dim_a == dim_b)
    throw std::invalid_argument("compute_grid: active dimensions must be distinct and in range");
  if (fixed_point.size() != inst.dim)
    throw std::invalid_argument("compute_grid: fixed point dimension mismatch");

  GridExport grid;
  grid.instance_id = inst.instance_id;
  grid.seed = inst.seed;
  grid.dim_a = dim_a;
  grid.dim_b = dim_b;
  grid.fixed_point = fixed_point;
  grid.res_a = res_a;
  grid.res_b = res_b;
  grid.axis_a = linspace_exact(inst.lower[dim_a], inst.upper[dim_a], res_a);
  grid.axis_b = linspace_exact(inst.lower[dim_b], inst.upper[dim_b], res_b);
  grid.values.resize(res_a, res_b);

  Eigen::VectorXd x = fixed_point;
  for (int i = 0; i < res_a; ++i) {
    x[dim_a] = grid.axis_a[i];
    for (int j = 0; j < res_b; ++j) {
      x[dim_b] = grid.axis_b[j];
      grid.values(i, j) = evaluate(x, inst).value;
    }
  }
  return grid;
}

void write_grid(const GridExport& grid, std::ostream& os) {
  os << "# gnbg-grid/1\n";
  os << "# instance_id=" << grid.instance_id << " seed=" << grid.seed
     << " figure_mode=" << (grid.figure_mode ? 1 : 0) << '\n';
  os << "# dims=" << grid.dim_a << ',' << grid.dim_b << '\n';
  os << std::setprecision(17);
  os << "# axis0: min=" << grid.axis_a[0] << " max=" << grid.axis_a[grid.res_a - 1]
     << " res=" << grid.res_a << '\n';
  os << "# axis1: min=" << grid.axis_b[0] << " max=" << grid.axis_b[grid.res_b - 1]
     << " res=" << grid.res_b << '\n';
  os << "# fixed=";
  for (Eigen::Index i = 0; i < grid.fixed_point.size(); ++i) {
    if (i > 0) os << ',';
    os << grid.fixed_point[i];
  }
  os << '\n';
  for (int i = 0; i < grid.res_a; ++i) {
    for (int j = 0; j < grid.res_b; ++j) {
      if (j > 0) os << ' ';
      os << grid.values(i, j);
    }
    os << '\n';
  }
}

void write_grid(const GridExport& grid, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  write_grid(grid, os);
  if (!os.good()) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace gnbg
