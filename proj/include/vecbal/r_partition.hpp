#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vecbal/two_partition.hpp"

namespace vecbal {

// Recursion constants: values[r] = C(r) with
//   C(1) = C(2) = 1,  C(r) = min_{r1+r2=r} max{f(r1), f(r2)},
//   f(1) = 1, f(s) = C(s) + 1/s for s >= 2,
// together with the minimizing split (ties -> smaller r1).
struct CTable {
  int r_max = 0;
  std::vector<double> values;  // index r, valid for 1..r_max
  std::vector<int> splits;     // minimizing r1; 0 for r = 1

  double c(int r) const;
  std::pair<int, int> split(int r) const;  // (r1, r2)
};

CTable c_table(int r_max);

struct RPartition {
  int r = 1;
  std::vector<int> labels;  // class in [1, r] per sequence index
};

struct DiscrepancyReport {
  std::vector<double> per_class_max;  // index class-1
  double achieved = 0.0;
  double bound = 0.0;
  bool pass = true;
  int worst_class = 0;          // 1-based; 0 when the sequence is empty
  std::size_t worst_prefix = 0; // 1-based k
  double slack = 1e-6;          // pass iff achieved <= bound * (1 + slack)
};

// Recursive split via weighted_two_partition; every class j and prefix k
// satisfies norm(sum_k X_j - (1/r) sum_k V) <= C(r) * d.
RPartition balanced_partition(const VectorSequence& seq, int r, const CTable& table);
RPartition balanced_partition(const VectorSequence& seq, int r);

// Evaluates the per-class prefix deviations against bound = C(r) * d.
DiscrepancyReport verify_partition(const VectorSequence& seq, const RPartition& part,
                                   const CTable& table, double slack = 1e-6);

}  // namespace vecbal
