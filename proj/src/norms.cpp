#include "vecbal/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace vecbal {

NormKind NormKind::weighted_diag(std::vector<double> w) {
  if (w.empty()) throw std::invalid_argument("wdiag: weights must be non-empty");
  for (double x : w)
    if (!(x > 0.0)) throw std::invalid_argument("wdiag: weights must be strictly positive");
  return {Tag::WeightedDiag, std::move(w)};
}

double norm(std::span<const double> v, const NormKind& kind) {
  switch (kind.tag) {
    case NormKind::Tag::L1: {
      double s = 0.0;
      for (double x : v) s += std::abs(x);
      return s;
    }
    case NormKind::Tag::L2: {
      double s = 0.0;
      for (double x : v) s += x * x;
      return std::sqrt(s);
    }
    case NormKind::Tag::Linf: {
      double s = 0.0;
      for (double x : v) s = std::max(s, std::abs(x));
      return s;
    }
    case NormKind::Tag::WeightedDiag: {
      if (v.size() != kind.weights.size())
        throw std::invalid_argument("wdiag: vector length does not match weight count");
      double s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        double t = kind.weights[i] * v[i];
        s += t * t;
      }
      return std::sqrt(s);
    }
  }
  throw std::logic_error("norm: unknown kind");
}

bool in_unit_ball(std::span<const double> v, const NormKind& kind, double eps) {
  return norm(v, kind) <= 1.0 + eps;
}

std::string norm_name(const NormKind& kind) {
  switch (kind.tag) {
    case NormKind::Tag::L1: return "l1";
    case NormKind::Tag::L2: return "l2";
    case NormKind::Tag::Linf: return "linf";
    case NormKind::Tag::WeightedDiag: return "wdiag";
  }
  throw std::logic_error("norm_name: unknown kind");
}

NormKind norm_from_name(const std::string& name, std::vector<double> weights) {
  if (name == "l1") return NormKind::l1();
  if (name == "l2") return NormKind::l2();
  if (name == "linf") return NormKind::linf();
  if (name == "wdiag") return NormKind::weighted_diag(std::move(weights));
  throw std::invalid_argument("unknown norm name: " + name);
}

}  // namespace vecbal
