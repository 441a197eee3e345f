#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vecbal/compensated.hpp"
#include "vecbal/norms.hpp"

namespace vecbal {

struct VectorSequence {
  std::size_t d = 0;
  NormKind norm = NormKind::l2();
  std::vector<Vec> vectors;

  // throws std::invalid_argument on dimension mismatch or vectors outside B
  void validate(double eps = 1e-9) const;
};

// r = r1 + r2 with both sides positive.
struct WeightedSplit {
  int r1 = 1;
  int r2 = 1;
  int r() const { return r1 + r2; }
};

struct TwoPartition {
  std::vector<int> labels;  // 1 or 2 per sequence index
};

struct LabelEvent {
  std::size_t index;
  int label;  // 1 or 2
};

// Streaming floating-variable construction. Vectors enter one at a time;
// whenever more than d coefficients float, a kernel walk drives at least one
// to an endpoint and the corresponding indices are emitted with their final
// class. Labels are never revised once emitted.
class FloatingState {
 public:
  FloatingState(std::size_t d, WeightedSplit split);

  // Returns the indices fixed by this push (possibly none), ascending.
  std::vector<LabelEvent> push(std::span<const double> v);

  // Assigns every still-floating index to its nearer endpoint (ties -> class 1).
  std::vector<LabelEvent> finish();

  std::size_t dimension() const { return d_; }
  WeightedSplit split() const { return split_; }
  std::size_t floating_count() const { return window_.size(); }
  std::size_t step() const { return fixed_count_; }
  std::size_t pushed() const { return next_index_; }

  // sum of beta(v) * v over everything seen so far; zero up to rounding drift
  Vec residual() const;

 private:
  struct Entry {
    std::size_t index;
    Vec v;
    double beta;
  };

  std::size_t d_;
  WeightedSplit split_;
  std::vector<Entry> window_;
  std::size_t next_index_ = 0;
  std::size_t fixed_count_ = 0;
  CompensatedVec fixed_sum_;
  bool finished_ = false;
};

// Batch form: push loop + finish over the whole sequence. Every prefix k
// satisfies norm(sum_k Y1 - (r1/r) sum_k V) <= d.
TwoPartition weighted_two_partition(const VectorSequence& seq, WeightedSplit split);

}  // namespace vecbal
