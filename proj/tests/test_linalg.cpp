#include <doctest.h>

#include <cmath>

#include "vecbal/generate.hpp"
#include "vecbal/linalg.hpp"

using namespace vecbal;

namespace {

double combo_residual(const ColumnSystem& sys, const std::vector<double>& alpha) {
  double worst = 0.0;
  for (std::size_t r = 0; r < sys.rows; ++r) {
    double s = 0.0;
    for (std::size_t j = 0; j < sys.columns.size(); ++j) s += alpha[j] * sys.columns[j][r];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace

TEST_CASE("kernel_direction on explicit dependence") {
  ColumnSystem sys{2, {{1, 0}, {0, 1}, {1, 1}}};
  auto dir = kernel_direction(sys);
  REQUIRE(dir.has_value());
  // proportional to (1, 1, -1)
  const auto& a = dir->alpha;
  CHECK(a[2] != 0.0);
  CHECK(a[0] / a[2] == doctest::Approx(-1.0));
  CHECK(a[1] / a[2] == doctest::Approx(-1.0));
  CHECK(combo_residual(sys, a) <= 1e-12);
}

TEST_CASE("kernel_direction on zero column") {
  ColumnSystem sys{2, {{0, 0}}};
  auto dir = kernel_direction(sys);
  REQUIRE(dir.has_value());
  CHECK(dir->alpha[0] == doctest::Approx(1.0));
}

TEST_CASE("kernel_direction on independent columns") {
  ColumnSystem sys{2, {{1, 0}, {0, 1}}};
  CHECK_FALSE(kernel_direction(sys).has_value());
}

TEST_CASE("kernel_direction never NONE with more columns than rows") {
  CounterRng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng.next_u64() % 32;
    ColumnSystem sys;
    sys.rows = rows;
    for (std::size_t j = 0; j <= rows; ++j) {
      std::vector<double> col(rows);
      for (double& x : col) x = rng.next_symmetric();
      sys.columns.push_back(std::move(col));
    }
    auto dir = kernel_direction(sys);
    REQUIRE(dir.has_value());
    double maxcol = 0.0;
    for (const auto& c : sys.columns)
      for (double x : c) maxcol = std::max(maxcol, std::abs(x));
    CHECK(combo_residual(sys, dir->alpha) <= 1e-8 * static_cast<double>(rows) * maxcol);
    double inf = 0.0;
    for (double x : dir->alpha) inf = std::max(inf, std::abs(x));
    CHECK(inf == doctest::Approx(1.0));
  }
}

TEST_CASE("kernel_direction on planted rank-deficient systems") {
  CounterRng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 2 + rng.next_u64() % 63;
    std::size_t cols = 2 + rng.next_u64() % std::min<std::size_t>(rows, 8);
    ColumnSystem sys;
    sys.rows = rows;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      std::vector<double> col(rows);
      for (double& x : col) x = rng.next_symmetric();
      sys.columns.push_back(std::move(col));
    }
    // last column = random combination of the others
    std::vector<double> last(rows, 0.0);
    for (const auto& c : sys.columns) {
      double w = rng.next_symmetric();
      for (std::size_t r = 0; r < rows; ++r) last[r] += w * c[r];
    }
    sys.columns.push_back(std::move(last));
    auto dir = kernel_direction(sys);
    REQUIRE(dir.has_value());
    double maxcol = 0.0;
    for (const auto& c : sys.columns)
      for (double x : c) maxcol = std::max(maxcol, std::abs(x));
    CHECK(combo_residual(sys, dir->alpha) <= 1e-8 * static_cast<double>(rows) * maxcol);
  }
}

TEST_CASE("box_walk simultaneous hits") {
  std::vector<double> beta{0.5, -0.5};
  KernelDirection dir{{1.0, -1.0}};
  auto w = box_walk(beta, dir, -1.0, 1.0);
  CHECK(w.t_star == doctest::Approx(0.5));
  REQUIRE(w.hit_indices.size() == 2);
  CHECK(w.hit_indices[0] == 0);
  CHECK(w.hit_indices[1] == 1);
  apply_walk(beta, dir, w, -1.0, 1.0);
  CHECK(beta[0] == 1.0);
  CHECK(beta[1] == -1.0);
}

TEST_CASE("box_walk picks the smaller |t|") {
  std::vector<double> beta{0.25};
  KernelDirection dir{{1.0}};
  auto w = box_walk(beta, dir, -1.0, 2.0);
  CHECK(w.t_star == doctest::Approx(-1.25));
  REQUIRE(w.hit_indices.size() == 1);
  CHECK(w.hit_indices[0] == 0);
}

TEST_CASE("box_walk tie goes positive") {
  std::vector<double> beta{0.0, 0.0};
  KernelDirection dir{{2.0, 1.0}};
  auto w = box_walk(beta, dir, -1.0, 1.0);
  CHECK(w.t_star == doctest::Approx(0.5));
  REQUIRE(w.hit_indices.size() == 1);
  CHECK(w.hit_indices[0] == 0);
}

TEST_CASE("box_walk rejects an all-zero direction") {
  std::vector<double> beta{0.0};
  KernelDirection dir{{0.0}};
  CHECK_THROWS_AS(box_walk(beta, dir, -1.0, 1.0), std::logic_error);
}

TEST_CASE("box_walk stays inside the box") {
  CounterRng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng.next_u64() % 8;
    double lo = -1.0 - rng.next_double();
    double hi = 1.0 + rng.next_double();
    std::vector<double> beta(n);
    KernelDirection dir;
    dir.alpha.resize(n);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      beta[j] = lo + (hi - lo) * (0.05 + 0.9 * rng.next_double());
      dir.alpha[j] = rng.next_symmetric();
      if (dir.alpha[j] != 0.0) any = true;
    }
    if (!any) dir.alpha[0] = 1.0;
    auto w = box_walk(beta, dir, lo, hi);
    CHECK(!w.hit_indices.empty());
    apply_walk(beta, dir, w, lo, hi);
    for (double b : beta) {
      CHECK(b >= lo);
      CHECK(b <= hi);
    }
    bool endpoint = false;
    for (double b : beta)
      if (b == lo || b == hi) endpoint = true;
    CHECK(endpoint);
  }
}
