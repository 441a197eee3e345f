#include "vecbal/r_partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vecbal {

double CTable::c(int r) const {
  if (r < 1 || r > r_max) throw std::invalid_argument("CTable: r out of range");
  return values[static_cast<std::size_t>(r)];
}

std::pair<int, int> CTable::split(int r) const {
  if (r < 2 || r > r_max) throw std::invalid_argument("CTable: split needs 2 <= r <= r_max");
  int r1 = splits[static_cast<std::size_t>(r)];
  return {r1, r - r1};
}

CTable c_table(int r_max) {
  if (r_max < 1) throw std::invalid_argument("c_table: r_max must be positive");
  CTable t;
  t.r_max = r_max;
  t.values.assign(static_cast<std::size_t>(r_max) + 1, 0.0);
  t.splits.assign(static_cast<std::size_t>(r_max) + 1, 0);
  t.values[1] = 1.0;

  // f(s): cost of a side of size s seen from its parent
  std::vector<double> f(static_cast<std::size_t>(r_max) + 1, 0.0);
  f[1] = 1.0;

  for (int r = 2; r <= r_max; ++r) {
    const double* fp = f.data();
    const int half = r / 2;
    // seed with the balanced split, then scan; skipping when f(r1) alone
    // already meets the incumbent keeps the table at r_max = 1e5 fast
    double best = std::max(fp[half], fp[r - half]);
    int best_r1 = half;
    for (int r1 = 1; r1 <= half; ++r1) {
      double a = fp[r1];
      if (a > best) continue;
      double v = std::max(a, fp[r - r1]);
      if (v < best) {
        best = v;
        best_r1 = r1;
      } else if (v == best && r1 < best_r1) {
        best_r1 = r1;
      }
    }
    t.values[static_cast<std::size_t>(r)] = best;
    t.splits[static_cast<std::size_t>(r)] = best_r1;
    f[static_cast<std::size_t>(r)] = best + 1.0 / r;
  }
  return t;
}

namespace {

void partition_recurse(const VectorSequence& seq, const std::vector<std::size_t>& indices,
                       int r, int class_offset, const CTable& table, std::vector<int>& labels) {
  if (r == 1) {
    for (std::size_t i : indices) labels[i] = class_offset;
    return;
  }
  auto [r1, r2] = table.split(r);

  VectorSequence sub;
  sub.d = seq.d;
  sub.norm = seq.norm;
  sub.vectors.reserve(indices.size());
  for (std::size_t i : indices) sub.vectors.push_back(seq.vectors[i]);

  TwoPartition two = weighted_two_partition(sub, WeightedSplit{r1, r2});

  std::vector<std::size_t> left, right;
  for (std::size_t j = 0; j < indices.size(); ++j)
    (two.labels[j] == 1 ? left : right).push_back(indices[j]);

  partition_recurse(seq, left, r1, class_offset, table, labels);
  partition_recurse(seq, right, r2, class_offset + r1, table, labels);
}

}  // namespace

RPartition balanced_partition(const VectorSequence& seq, int r, const CTable& table) {
  if (r < 1) throw std::invalid_argument("balanced_partition: r must be positive");
  if (table.r_max < r) throw std::invalid_argument("balanced_partition: CTable too small");
  seq.validate();

  RPartition part;
  part.r = r;
  part.labels.assign(seq.vectors.size(), 0);
  std::vector<std::size_t> all(seq.vectors.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  partition_recurse(seq, all, r, 1, table, part.labels);
  return part;
}

RPartition balanced_partition(const VectorSequence& seq, int r) {
  return balanced_partition(seq, r, c_table(std::max(r, 1)));
}

DiscrepancyReport verify_partition(const VectorSequence& seq, const RPartition& part,
                                   const CTable& table, double slack) {
  const int r = part.r;
  if (part.labels.size() != seq.vectors.size())
    throw std::invalid_argument("verify_partition: label count mismatch");
  for (int label : part.labels)
    if (label < 1 || label > r) throw std::invalid_argument("verify_partition: label out of range");

  DiscrepancyReport rep;
  rep.slack = slack;
  rep.bound = table.c(r) * static_cast<double>(seq.d);
  rep.per_class_max.assign(static_cast<std::size_t>(r), 0.0);

  std::vector<CompensatedVec> class_sum(static_cast<std::size_t>(r), CompensatedVec(seq.d));
  CompensatedVec total(seq.d);
  Vec dev(seq.d);

  for (std::size_t k = 0; k < seq.vectors.size(); ++k) {
    total.add(seq.vectors[k]);
    class_sum[static_cast<std::size_t>(part.labels[k] - 1)].add(seq.vectors[k]);
    for (int j = 0; j < r; ++j) {
      const auto& s = class_sum[static_cast<std::size_t>(j)].value();
      const auto& t = total.value();
      for (std::size_t c = 0; c < seq.d; ++c) dev[c] = s[c] - t[c] / r;
      double x = norm(dev, seq.norm);
      if (x > rep.per_class_max[static_cast<std::size_t>(j)])
        rep.per_class_max[static_cast<std::size_t>(j)] = x;
      if (x > rep.achieved) {
        rep.achieved = x;
        rep.worst_class = j + 1;
        rep.worst_prefix = k + 1;
      }
    }
  }
  rep.pass = rep.achieved <= rep.bound * (1.0 + slack);
  return rep;
}

}  // namespace vecbal
