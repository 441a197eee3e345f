#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace vecbal {

// Columns of the active constraint matrix, one per floating variable.
struct ColumnSystem {
  std::size_t rows = 0;
  std::vector<std::vector<double>> columns;
};

// A nonzero coefficient vector with sum_j alpha[j] * column_j = 0,
// normalized to infinity-norm 1.
struct KernelDirection {
  std::vector<double> alpha;
};

// Gaussian elimination with partial pivoting. Returns a kernel direction if
// the columns are linearly dependent, nullopt if they are (numerically)
// independent. tol_rank < 0 selects the default 1e-10 * max column magnitude.
// With more columns than rows the result is never nullopt.
std::optional<KernelDirection> kernel_direction(const ColumnSystem& sys,
                                                double tol_rank = -1.0);

struct BoxWalk {
  double t_star = 0.0;
  std::vector<std::size_t> hit_indices;  // ascending; every coord at an endpoint
};

// Walk beta + t*alpha inside [lo, hi]^n until some coordinate reaches an
// endpoint. Among the two stopping values of t the one of smaller magnitude
// wins; exact ties go to positive t.
BoxWalk box_walk(std::span<const double> beta, const KernelDirection& dir,
                 double lo, double hi, double eps_boundary = 1e-9);

// Applies the walk in place and snaps every hit coordinate exactly to its
// nearer endpoint; all coordinates are clamped into [lo, hi].
void apply_walk(std::span<double> beta, const KernelDirection& dir, const BoxWalk& walk,
                double lo, double hi);

}  // namespace vecbal
