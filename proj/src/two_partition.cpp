#include "vecbal/two_partition.hpp"

#include <sstream>
#include <stdexcept>

#include "vecbal/linalg.hpp"

namespace vecbal {

void VectorSequence::validate(double eps) const {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) {
      std::ostringstream os;
      os << "vector " << i << " has length " << vectors[i].size() << ", expected " << d;
      throw std::invalid_argument(os.str());
    }
    if (!in_unit_ball(vectors[i], norm, eps)) {
      std::ostringstream os;
      os << "vector " << i << " lies outside the unit ball (norm " << vecbal::norm(vectors[i], norm) << ")";
      throw std::invalid_argument(os.str());
    }
  }
}

FloatingState::FloatingState(std::size_t d, WeightedSplit split)
    : d_(d), split_(split), fixed_sum_(d) {
  if (split.r1 < 1 || split.r2 < 1)
    throw std::invalid_argument("split weights must be positive integers");
}

std::vector<LabelEvent> FloatingState::push(std::span<const double> v) {
  if (finished_) throw std::logic_error("push after finish");
  if (v.size() != d_) throw std::invalid_argument("push: vector dimension mismatch");

  window_.push_back(Entry{next_index_++, Vec(v.begin(), v.end()), 0.0});

  std::vector<LabelEvent> out;
  if (window_.size() <= d_) return out;

  const double lo = -static_cast<double>(split_.r1);
  const double hi = static_cast<double>(split_.r2);

  ColumnSystem sys;
  sys.rows = d_;
  sys.columns.reserve(window_.size());
  for (const auto& e : window_) sys.columns.push_back(e.v);

  auto dir = kernel_direction(sys);
  if (!dir) {
    std::ostringstream os;
    os << "dependence detection failed on " << window_.size() << " columns in dimension " << d_
       << " (columns:";
    for (const auto& e : window_) {
      os << " [";
      for (double x : e.v) os << x << ",";
      os << "]";
    }
    os << ")";
    throw std::runtime_error(os.str());
  }

  std::vector<double> beta(window_.size());
  for (std::size_t j = 0; j < window_.size(); ++j) beta[j] = window_[j].beta;

  BoxWalk walk = box_walk(beta, *dir, lo, hi);
  apply_walk(beta, *dir, walk, lo, hi);
  for (std::size_t j = 0; j < window_.size(); ++j) window_[j].beta = beta[j];

  // Window entries are in arrival order, so walking the hits front to back
  // emits ascending sequence indices.
  for (std::size_t j : walk.hit_indices) {
    const Entry& e = window_[j];
    int label = (e.beta == hi) ? 1 : 2;
    fixed_sum_.add_scaled(e.v, e.beta);
    out.push_back(LabelEvent{e.index, label});
    ++fixed_count_;
  }
  for (auto it = walk.hit_indices.rbegin(); it != walk.hit_indices.rend(); ++it)
    window_.erase(window_.begin() + static_cast<std::ptrdiff_t>(*it));

  return out;
}

std::vector<LabelEvent> FloatingState::finish() {
  const double lo = -static_cast<double>(split_.r1);
  const double hi = static_cast<double>(split_.r2);
  std::vector<LabelEvent> out;
  for (const auto& e : window_) {
    int label = (hi - e.beta <= e.beta - lo) ? 1 : 2;
    out.push_back(LabelEvent{e.index, label});
    ++fixed_count_;
  }
  window_.clear();
  finished_ = true;
  return out;
}

Vec FloatingState::residual() const {
  CompensatedVec acc(d_);
  acc.add(fixed_sum_.value());
  for (const auto& e : window_) acc.add_scaled(e.v, e.beta);
  return acc.value();
}

TwoPartition weighted_two_partition(const VectorSequence& seq, WeightedSplit split) {
  seq.validate();
  FloatingState state(seq.d, split);
  TwoPartition part;
  part.labels.assign(seq.vectors.size(), 0);
  auto record = [&part](const std::vector<LabelEvent>& events) {
    for (const auto& e : events) part.labels[e.index] = e.label;
  };
  for (const auto& v : seq.vectors) record(state.push(v));
  record(state.finish());
  return part;
}

}  // namespace vecbal
