#pragma once

#include <cstddef>
#include <vector>

#include "vecbal/r_partition.hpp"

namespace vecbal {

struct SetSequence {
  std::size_t d = 0;
  NormKind norm = NormKind::l2();
  std::vector<std::vector<Vec>> sets;

  void validate(double eps = 1e-9) const;
  std::size_t min_set_size() const;
};

struct Selection {
  int r = 1;
  // per set i: r distinct member indices, one per class
  std::vector<std::vector<std::size_t>> chi;
};

struct RoundingStats {
  std::size_t stalls = 0;
  std::size_t max_floating_at_stall = 0;  // proof bound: <= d + q <= 2d
};

// Iterative rounding of x_iv = k/|V_i|: walk kernel directions of the active
// system, advance the prefix only at trivial-kernel stalls, final-round per
// set. Every prefix n satisfies
//   norm(sum_{i<=n} (sum_{U_i} v - (k/|V_i|) sum_{V_i} v)) <= 2d.
std::vector<std::vector<std::size_t>> k_subset_rounding(const SetSequence& sets, int k,
                                                        RoundingStats* stats = nullptr);

// Composed r-selection: optional pre-reduction to size-r sets (k = r), then
// recursive class splitting along the CTable. Discrepancy is at most
// 2*C(r)*d + 2d/r (the latter term only when some |V_i| > r), hence < 5d.
Selection r_selection(const SetSequence& sets, int r, const CTable& table);

// disc(chi, (V_i)) = max_n max_l norm(sum_{i<=n} (chi(i,l) - mean(V_i))).
// bound < 0 selects the default 5d.
DiscrepancyReport selection_discrepancy(const SetSequence& sets, const Selection& sel,
                                        double bound = -1.0, double slack = 1e-6);

// Uncentered prefix sums max_n max_l norm(sum_{i<=n} chi(i,l)); bound 5d.
DiscrepancyReport uncentered_discrepancy(const SetSequence& sets, const Selection& sel,
                                         double bound = -1.0, double slack = 1e-6);

struct ZeroSumSelection {
  Selection selection;
  DiscrepancyReport uncentered;
};

// Requires every set to sum to zero (tolerance 1e-9); the uncentered class
// prefix sums are then bounded by 5d.
ZeroSumSelection zero_sum_selection(const SetSequence& sets, int r, const CTable& table);

}  // namespace vecbal
