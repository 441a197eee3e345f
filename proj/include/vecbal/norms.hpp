#pragma once

#include <span>
#include <string>
#include <vector>

namespace vecbal {

using Vec = std::vector<double>;

// Which norm the bounds are measured in. WeightedDiag is the norm
// ||x|| = ||diag(w) x||_2 with strictly positive weights.
struct NormKind {
  enum class Tag { L1, L2, Linf, WeightedDiag };

  Tag tag = Tag::L2;
  std::vector<double> weights;  // WeightedDiag only

  static NormKind l1() { return {Tag::L1, {}}; }
  static NormKind l2() { return {Tag::L2, {}}; }
  static NormKind linf() { return {Tag::Linf, {}}; }
  static NormKind weighted_diag(std::vector<double> w);
};

double norm(std::span<const double> v, const NormKind& kind);

// true iff norm(v) <= 1 + eps
bool in_unit_ball(std::span<const double> v, const NormKind& kind, double eps = 1e-9);

// Names used in all file formats: "l1", "l2", "linf", "wdiag".
std::string norm_name(const NormKind& kind);
NormKind norm_from_name(const std::string& name, std::vector<double> weights = {});

}  // namespace vecbal
