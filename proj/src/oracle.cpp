#include "vecbal/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vecbal {

namespace {

// r-permutations of the member indices of one set, in lexicographic order
std::vector<std::vector<std::size_t>> ordered_tuples(std::size_t set_size, int r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::vector<char> used(set_size, 0);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == static_cast<std::size_t>(r)) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < set_size; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

PartitionOracle brute_force_partition(const VectorSequence& seq, int r,
                                      std::uint64_t max_enumerations) {
  seq.validate();
  if (r < 1) throw std::invalid_argument("brute_force_partition: r must be positive");
  const std::size_t N = seq.vectors.size();
  const std::size_t d = seq.d;

  double count = 1.0;
  for (std::size_t i = 0; i < N; ++i) count *= static_cast<double>(r);
  if (count > static_cast<double>(max_enumerations))
    throw std::length_error("brute_force_partition: instance too large to enumerate");

  // prefix totals
  std::vector<Vec> totals(N, Vec(d, 0.0));
  Vec run(d, 0.0);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t c = 0; c < d; ++c) run[c] += seq.vectors[k][c];
    totals[k] = run;
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> cur(N, 0), best_labels(N, 1);
  std::vector<Vec> sums(static_cast<std::size_t>(r), Vec(d, 0.0));
  Vec dev(d);

  auto rec = [&](auto&& self, std::size_t k, double runmax) -> void {
    if (runmax >= best) return;
    if (k == N) {
      best = runmax;
      best_labels = cur;
      return;
    }
    const Vec& v = seq.vectors[k];
    for (int j = 0; j < r; ++j) {
      auto& s = sums[static_cast<std::size_t>(j)];
      for (std::size_t c = 0; c < d; ++c) s[c] += v[c];
      double m = runmax;
      for (int jj = 0; jj < r; ++jj) {
        const auto& sj = sums[static_cast<std::size_t>(jj)];
        for (std::size_t c = 0; c < d; ++c) dev[c] = sj[c] - totals[k][c] / r;
        m = std::max(m, norm(dev, seq.norm));
      }
      if (m < best) {
        cur[k] = j + 1;
        self(self, k + 1, m);
      }
      for (std::size_t c = 0; c < d; ++c) s[c] -= v[c];
    }
  };

  if (N == 0) {
    best = 0.0;
  } else {
    rec(rec, 0, 0.0);
  }

  PartitionOracle out;
  out.optimum = best;
  out.labels = best_labels;
  return out;
}

SelectionOracle brute_force_selection(const SetSequence& sets, int r, bool centered,
                                      std::uint64_t max_enumerations) {
  sets.validate();
  if (r < 1) throw std::invalid_argument("brute_force_selection: r must be positive");
  const std::size_t N = sets.sets.size();
  const std::size_t d = sets.d;
  for (std::size_t i = 0; i < N; ++i)
    if (sets.sets[i].size() < static_cast<std::size_t>(r))
      throw std::invalid_argument("brute_force_selection: set smaller than r");

  std::vector<std::vector<std::vector<std::size_t>>> tuples(N);
  double count = 1.0;
  for (std::size_t i = 0; i < N; ++i) {
    tuples[i] = ordered_tuples(sets.sets[i].size(), r);
    count *= static_cast<double>(tuples[i].size());
    if (count > static_cast<double>(max_enumerations))
      throw std::length_error("brute_force_selection: instance too large to enumerate");
  }

  std::vector<Vec> means(N, Vec(d, 0.0));
  for (std::size_t i = 0; i < N; ++i) {
    for (const auto& w : sets.sets[i])
      for (std::size_t c = 0; c < d; ++c) means[i][c] += w[c];
    for (std::size_t c = 0; c < d; ++c) means[i][c] /= static_cast<double>(sets.sets[i].size());
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::size_t>> cur(N), best_chi(N);
  std::vector<Vec> sums(static_cast<std::size_t>(r), Vec(d, 0.0));

  auto rec = [&](auto&& self, std::size_t i, double runmax) -> void {
    if (i == N) {
      if (runmax < best) {
        best = runmax;
        best_chi = cur;
      }
      return;
    }
    std::vector<Vec> saved = sums;
    for (const auto& tup : tuples[i]) {
      double m = runmax;
      for (int l = 0; l < r; ++l) {
        auto& s = sums[static_cast<std::size_t>(l)];
        const Vec& w = sets.sets[i][tup[static_cast<std::size_t>(l)]];
        for (std::size_t c = 0; c < d; ++c) {
          s[c] += w[c];
          if (centered) s[c] -= means[i][c];
        }
        m = std::max(m, norm(s, sets.norm));
      }
      if (m < best) {
        cur[i] = tup;
        self(self, i + 1, m);
      }
      sums = saved;
    }
  };

  if (N == 0) {
    best = 0.0;
  } else {
    rec(rec, 0, 0.0);
  }

  SelectionOracle out;
  out.optimum = best;
  out.chi = best_chi;
  return out;
}

}  // namespace vecbal
