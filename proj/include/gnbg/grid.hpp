#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <iosfwd>

#include "gnbg/problem.hpp"

namespace gnbg {

// A rectangular slice of the landscape over two active dimensions; the
// remaining coordinates are held at `fixed_point`. Node (i, j) sits at the
// i-th point of axis 0 and j-th point of axis 1, linearly spaced over the
// instance bounds of those dimensions, endpoints included.
struct GridExport {
  int instance_id = 0;
  std::uint64_t seed = 0;
  bool figure_mode = false;
  int dim_a = 0;
  int dim_b = 1;
  Eigen::VectorXd fixed_point;
  int res_a = 0;
  int res_b = 0;
  Eigen::VectorXd axis_a;  // res_a nodes
  Eigen::VectorXd axis_b;  // res_b nodes
  Eigen::MatrixXd values;  // res_a x res_b
};

// Evaluates the instance over the slice. Both resolutions must be >= 2 and
// the active dimensions distinct and in range.
GridExport compute_grid(const Instanced& inst, int dim_a, int dim_b,
                        const Eigen::VectorXd& fixed_point, int res_a, int res_b);

// Plain text: '#'-prefixed header lines with the axes metadata, then res_a
// rows of res_b values with 17 significant digits.
void write_grid(const GridExport& grid, std::ostream& os);
void write_grid(const GridExport& grid, const std::filesystem::path& path);

}  // namespace gnbg
