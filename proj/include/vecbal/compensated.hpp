#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vecbal {

// Kahan-compensated coordinatewise accumulator.
class CompensatedVec {
 public:
  explicit CompensatedVec(std::size_t d) : sum_(d, 0.0), comp_(d, 0.0) {}

  void add_scaled(std::span<const double> v, double scale) {
    for (std::size_t i = 0; i < sum_.size(); ++i) {
      double y = scale * v[i] - comp_[i];
      double t = sum_[i] + y;
      comp_[i] = (t - sum_[i]) - y;
      sum_[i] = t;
    }
  }

  void add(std::span<const double> v) { add_scaled(v, 1.0); }

  const std::vector<double>& value() const { return sum_; }
  std::size_t size() const { return sum_.size(); }

 private:
  std::vector<double> sum_, comp_;
};

}  // namespace vecbal
