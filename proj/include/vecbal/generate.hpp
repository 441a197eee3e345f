#pragma once

#include <cstdint>
#include <string>

#include "vecbal/selection.hpp"
#include "vecbal/two_partition.hpp"

namespace vecbal {

// Counter-based 64-bit generator: value(i) = splitmix64(seed + i * GOLDEN).
// Stateless apart from the counter, so instances reproduce bit-for-bit from
// (seed, draw order) alone; documented in the README for ports.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  double next_double();              // uniform [0, 1)
  double next_symmetric();           // uniform [-1, 1)
  double next_gaussian();            // Box-Muller
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

enum class Dist { Ball, Signs, ZeroSum };

Dist dist_from_name(const std::string& name);
std::string dist_name(Dist dist);

// One point uniform in the unit ball of the given norm.
Vec sample_in_ball(CounterRng& rng, std::size_t d, const NormKind& kind);

VectorSequence gen_sequence(std::size_t n, std::size_t d, Dist dist, const NormKind& kind,
                            std::uint64_t seed);

// set_size: members per set (Signs pairs v with -v, so it must be even).
SetSequence gen_sets(std::size_t n, std::size_t d, Dist dist, const NormKind& kind,
                     std::uint64_t seed, std::size_t set_size);

}  // namespace vecbal
