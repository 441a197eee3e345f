#include "vecbal/generate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vecbal {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return splitmix64(seed_ + counter_ * kGolden);
}

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_symmetric() { return 2.0 * next_double() - 1.0; }

double CounterRng::next_gaussian() {
  double u1 = next_double();
  double u2 = next_double();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Dist dist_from_name(const std::string& name) {
  if (name == "ball") return Dist::Ball;
  if (name == "signs") return Dist::Signs;
  if (name == "zerosum") return Dist::ZeroSum;
  throw std::invalid_argument("unknown distribution: " + name);
}

std::string dist_name(Dist dist) {
  switch (dist) {
    case Dist::Ball: return "ball";
    case Dist::Signs: return "signs";
    case Dist::ZeroSum: return "zerosum";
  }
  throw std::logic_error("dist_name: unknown dist");
}

Vec sample_in_ball(CounterRng& rng, std::size_t d, const NormKind& kind) {
  Vec v(d, 0.0);
  if (d == 0) return v;
  switch (kind.tag) {
    case NormKind::Tag::Linf: {
      for (double& x : v) x = rng.next_symmetric();
      return v;
    }
    case NormKind::Tag::L2:
    case NormKind::Tag::WeightedDiag: {
      // gaussian direction, radius u^(1/d)
      double s = 0.0;
      for (double& x : v) {
        x = rng.next_gaussian();
        s += x * x;
      }
      s = std::sqrt(s);
      if (s == 0.0) s = 1.0;
      double radius = std::pow(rng.next_double(), 1.0 / static_cast<double>(d));
      for (double& x : v) x *= radius / s;
      if (kind.tag == NormKind::Tag::WeightedDiag) {
        if (kind.weights.size() != d)
          throw std::invalid_argument("sample_in_ball: weight count mismatch");
        for (std::size_t i = 0; i < d; ++i) v[i] /= kind.weights[i];
      }
      return v;
    }
    case NormKind::Tag::L1: {
      // exponential spacings with signs land on the simplex boundary
      double s = 0.0;
      Vec sign(d);
      for (std::size_t i = 0; i < d; ++i) {
        double u = rng.next_double();
        if (u >= 1.0) u = 1.0 - 0x1.0p-53;
        v[i] = -std::log(1.0 - u);
        s += v[i];
        sign[i] = rng.next_double() < 0.5 ? -1.0 : 1.0;
      }
      if (s == 0.0) s = 1.0;
      double radius = std::pow(rng.next_double(), 1.0 / static_cast<double>(d));
      for (std::size_t i = 0; i < d; ++i) v[i] = sign[i] * v[i] / s * radius;
      return v;
    }
  }
  throw std::logic_error("sample_in_ball: unknown norm");
}

VectorSequence gen_sequence(std::size_t n, std::size_t d, Dist dist, const NormKind& kind,
                            std::uint64_t seed) {
  CounterRng rng(seed);
  VectorSequence seq;
  seq.d = d;
  seq.norm = kind;
  seq.vectors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = sample_in_ball(rng, d, kind);
    if (dist == Dist::Signs) {
      double s = rng.next_double() < 0.5 ? -1.0 : 1.0;
      for (double& x : v) x *= s;
    }
    if (dist == Dist::ZeroSum)
      throw std::invalid_argument("gen_sequence: zerosum applies to sets only");
    seq.vectors.push_back(std::move(v));
  }
  return seq;
}

SetSequence gen_sets(std::size_t n, std::size_t d, Dist dist, const NormKind& kind,
                     std::uint64_t seed, std::size_t set_size) {
  if (set_size < 1) throw std::invalid_argument("gen_sets: set size must be positive");
  if (dist == Dist::Signs && set_size % 2 != 0)
    throw std::invalid_argument("gen_sets: signs needs an even set size");
  CounterRng rng(seed);
  SetSequence out;
  out.d = d;
  out.norm = kind;
  out.sets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> set;
    switch (dist) {
      case Dist::Ball: {
        for (std::size_t j = 0; j < set_size; ++j) set.push_back(sample_in_ball(rng, d, kind));
        break;
      }
      case Dist::Signs: {
        for (std::size_t j = 0; j < set_size / 2; ++j) {
          Vec v = sample_in_ball(rng, d, kind);
          Vec w(d);
          for (std::size_t c = 0; c < d; ++c) w[c] = -v[c];
          set.push_back(std::move(v));
          set.push_back(std::move(w));
        }
        break;
      }
      case Dist::ZeroSum: {
        for (std::size_t j = 0; j < set_size; ++j) set.push_back(sample_in_ball(rng, d, kind));
        Vec mean(d, 0.0);
        for (const auto& v : set)
          for (std::size_t c = 0; c < d; ++c) mean[c] += v[c];
        for (std::size_t c = 0; c < d; ++c) mean[c] /= static_cast<double>(set_size);
        double maxnorm = 0.0;
        for (auto& v : set) {
          for (std::size_t c = 0; c < d; ++c) v[c] -= mean[c];
          maxnorm = std::max(maxnorm, norm(v, kind));
        }
        if (maxnorm > 1.0)
          for (auto& v : set)
            for (std::size_t c = 0; c < d; ++c) v[c] /= maxnorm;
        break;
      }
    }
    out.sets.push_back(std::move(set));
  }
  return out;
}

}  // namespace vecbal
