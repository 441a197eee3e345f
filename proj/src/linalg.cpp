#include "vecbal/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vecbal {

namespace {

void normalize_inf(std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  if (m > 0.0)
    for (double& x : a) x /= m;
}

}  // namespace

std::optional<KernelDirection> kernel_direction(const ColumnSystem& sys, double tol_rank) {
  const std::size_t m = sys.rows;
  const std::size_t n = sys.columns.size();
  for (const auto& c : sys.columns)
    if (c.size() != m) throw std::invalid_argument("kernel_direction: column length mismatch");
  if (n == 0) return std::nullopt;

  double maxmag = 0.0;
  for (const auto& c : sys.columns)
    for (double x : c) maxmag = std::max(maxmag, std::abs(x));
  if (tol_rank < 0.0) tol_rank = 1e-10 * maxmag;

  // Incremental elimination; each pivot keeps its reduced column together with
  // the expression of that reduced column in terms of the original columns.
  struct Pivot {
    std::size_t row;
    std::vector<double> reduced;
    std::vector<double> coeff;
  };
  std::vector<Pivot> pivots;
  std::vector<char> row_used(m, 0);

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> c = sys.columns[j];
    std::vector<double> coeff(n, 0.0);
    coeff[j] = 1.0;
    for (const auto& p : pivots) {
      double f = c[p.row] / p.reduced[p.row];
      if (f != 0.0) {
        for (std::size_t r = 0; r < m; ++r) c[r] -= f * p.reduced[r];
        for (std::size_t i = 0; i < n; ++i) coeff[i] -= f * p.coeff[i];
      }
      c[p.row] = 0.0;
    }
    double residual = 0.0;
    std::size_t pivot_row = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (row_used[r]) continue;
      if (std::abs(c[r]) > residual) {
        residual = std::abs(c[r]);
        pivot_row = r;
      }
    }
    if (residual <= tol_rank || pivot_row == m) {
      normalize_inf(coeff);
      return KernelDirection{std::move(coeff)};
    }
    row_used[pivot_row] = 1;
    pivots.push_back({pivot_row, std::move(c), std::move(coeff)});
  }
  return std::nullopt;
}

BoxWalk box_walk(std::span<const double> beta, const KernelDirection& dir,
                 double lo, double hi, double eps_boundary) {
  const auto& a = dir.alpha;
  if (a.size() != beta.size())
    throw std::invalid_argument("box_walk: alpha/beta length mismatch");
  double t_plus = std::numeric_limits<double>::infinity();
  double t_minus = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0.0) continue;
    any = true;
    double up = (a[j] > 0.0 ? (hi - beta[j]) : (lo - beta[j])) / a[j];
    double dn = (a[j] > 0.0 ? (lo - beta[j]) : (hi - beta[j])) / a[j];
    t_plus = std::min(t_plus, up);
    t_minus = std::max(t_minus, dn);
  }
  if (!any)
    throw std::logic_error("box_walk: direction vanishes on all floating coordinates");

  BoxWalk w;
  w.t_star = (std::abs(t_plus) <= std::abs(t_minus)) ? t_plus : t_minus;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double x = beta[j] + w.t_star * a[j];
    if (x <= lo + eps_boundary || x >= hi - eps_boundary) w.hit_indices.push_back(j);
  }
  return w;
}

void apply_walk(std::span<double> beta, const KernelDirection& dir, const BoxWalk& walk,
                double lo, double hi) {
  for (std::size_t j = 0; j < beta.size(); ++j) {
    beta[j] += walk.t_star * dir.alpha[j];
    beta[j] = std::min(hi, std::max(lo, beta[j]));
  }
  for (std::size_t j : walk.hit_indices)
    beta[j] = (beta[j] - lo <= hi - beta[j]) ? lo : hi;
}

}  // namespace vecbal
