#pragma once

#include <cstdint>
#include <vector>

#include "vecbal/selection.hpp"
#include "vecbal/two_partition.hpp"

namespace vecbal {

struct PartitionOracle {
  double optimum = 0.0;
  std::vector<int> labels;  // class in [1, r]
};

struct SelectionOracle {
  double optimum = 0.0;
  std::vector<std::vector<std::size_t>> chi;
};

// Exact minimum over all r^N labelings of the max prefix deviation.
// Throws std::length_error when r^N exceeds max_enumerations.
PartitionOracle brute_force_partition(const VectorSequence& seq, int r,
                                      std::uint64_t max_enumerations = 10'000'000);

// Exact minimum over all ordered r-selections of disc (centered) or of the
// raw class prefix sums (uncentered). Guarded by the total enumeration count
// prod_i C(|V_i|, r) * r!.
SelectionOracle brute_force_selection(const SetSequence& sets, int r, bool centered,
                                      std::uint64_t max_enumerations = 10'000'000);

}  // namespace vecbal
