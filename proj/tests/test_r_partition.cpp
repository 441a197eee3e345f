#include <doctest.h>

#include <cmath>

#include "vecbal/generate.hpp"
#include "vecbal/oracle.hpp"
#include "vecbal/r_partition.hpp"

using namespace vecbal;

TEST_CASE("c_table anchors") {
  auto t = c_table(16);
  CHECK(t.c(1) == 1.0);
  CHECK(t.c(2) == 1.0);
  CHECK(t.c(3) == doctest::Approx(1.5));
  CHECK(t.c(4) == doctest::Approx(1.5));
  CHECK(t.split(4) == std::pair<int, int>{2, 2});
  CHECK(t.c(7) == doctest::Approx(11.0 / 6.0));
  CHECK(t.split(7) == std::pair<int, int>{3, 4});
  // consistency with max{1/3 + C(3), 1/4 + C(4)}
  CHECK(t.c(7) <= std::max(1.0 / 3.0 + t.c(3), 1.0 / 4.0 + t.c(4)) + 1e-15);
}

TEST_CASE("c_table recursion re-derived independently") {
  const int rmax = 200;
  auto t = c_table(rmax);
  std::vector<double> c(rmax + 1), f(rmax + 1);
  c[1] = 1.0;
  f[1] = 1.0;
  for (int r = 2; r <= rmax; ++r) {
    double best = 1e300;
    for (int r1 = 1; r1 < r; ++r1) best = std::min(best, std::max(f[r1], f[r - r1]));
    c[r] = best;
    f[r] = best + 1.0 / r;
  }
  for (int r = 1; r <= rmax; ++r) CHECK(t.c(r) == doctest::Approx(c[r]).epsilon(1e-14));
}

TEST_CASE("c_table stays under the ceiling") {
  auto t = c_table(2000);
  for (int r = 1; r <= 2000; ++r) {
    CHECK(t.c(r) <= 2.0005);
    CHECK(t.c(r) + 1.0 / r <= 2.1);
  }
}

TEST_CASE("verify_partition arithmetic") {
  auto t = c_table(2);
  VectorSequence zeros{3, NormKind::l2(), {{0, 0, 0}, {0, 0, 0}}};
  RPartition part{2, {1, 2}};
  auto rep = verify_partition(zeros, part, t);
  CHECK(rep.achieved == 0.0);
  CHECK(rep.pass);

  VectorSequence ones{1, NormKind::l2(), {{1}, {1}}};
  RPartition both1{2, {1, 1}};
  rep = verify_partition(ones, both1, t);
  CHECK(rep.achieved == doctest::Approx(1.0));
  CHECK(rep.bound == doctest::Approx(1.0));
  CHECK(rep.pass);

  VectorSequence four{1, NormKind::l2(), {{1}, {1}, {1}, {1}}};
  RPartition all1{2, {1, 1, 1, 1}};
  rep = verify_partition(four, all1, t);
  CHECK(rep.achieved == doctest::Approx(2.0));
  CHECK_FALSE(rep.pass);
  CHECK(rep.worst_class == 1);
  CHECK(rep.worst_prefix == 4);

  RPartition bad{2, {1, 3, 1, 1}};
  CHECK_THROWS_AS(verify_partition(four, bad, t), std::invalid_argument);
}

TEST_CASE("r=1 is the identity partition") {
  auto seq = gen_sequence(20, 2, Dist::Ball, NormKind::l2(), 5);
  auto part = balanced_partition(seq, 1);
  for (int label : part.labels) CHECK(label == 1);
  auto rep = verify_partition(seq, part, c_table(1));
  CHECK(rep.achieved <= 1e-12);
}

TEST_CASE("twelve ones, three classes") {
  VectorSequence seq{1, NormKind::l2(), std::vector<Vec>(12, Vec{1.0})};
  auto t = c_table(3);
  auto part = balanced_partition(seq, 3, t);
  auto rep = verify_partition(seq, part, t);
  CHECK(rep.bound == doctest::Approx(1.5));
  CHECK(rep.pass);
  auto oracle = brute_force_partition(seq, 3);
  CHECK(oracle.optimum == doctest::Approx(2.0 / 3.0));
  CHECK(oracle.optimum <= rep.achieved + 1e-12);
}

TEST_CASE("random instances meet the C(r) bound") {
  auto t = c_table(16);
  CounterRng seeds(77);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 1 + seeds.next_u64() % 4;
    std::size_t n = 10 + seeds.next_u64() % 150;
    int r = 2 + static_cast<int>(seeds.next_u64() % 7);
    NormKind kind = (trial % 2 == 0) ? NormKind::l2() : NormKind::linf();
    auto seq = gen_sequence(n, d, Dist::Ball, kind, seeds.next_u64());
    auto part = balanced_partition(seq, r, t);
    // labels form a partition into [r]
    for (int label : part.labels) {
      CHECK(label >= 1);
      CHECK(label <= r);
    }
    auto rep = verify_partition(seq, part, t);
    CHECK(rep.pass);
    CHECK(rep.achieved <= 2.0005 * static_cast<double>(d) * (1.0 + 1e-6));
  }
}
