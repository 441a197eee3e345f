#include "vecbal/selection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vecbal/linalg.hpp"

namespace vecbal {

void SetSequence::validate(double eps) const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) {
      std::ostringstream os;
      os << "set " << i << " is empty";
      throw std::invalid_argument(os.str());
    }
    for (std::size_t v = 0; v < sets[i].size(); ++v) {
      if (sets[i][v].size() != d) {
        std::ostringstream os;
        os << "set " << i << " member " << v << " has length " << sets[i][v].size()
           << ", expected " << d;
        throw std::invalid_argument(os.str());
      }
      if (!in_unit_ball(sets[i][v], norm, eps)) {
        std::ostringstream os;
        os << "set " << i << " member " << v << " lies outside the unit ball";
        throw std::invalid_argument(os.str());
      }
    }
  }
}

std::size_t SetSequence::min_set_size() const {
  std::size_t m = sets.empty() ? 0 : sets[0].size();
  for (const auto& s : sets) m = std::min(m, s.size());
  return m;
}

namespace {

constexpr double kSnapEps = 1e-9;

bool is_floating(double x) { return x > 0.0 && x < 1.0; }

// Restore sum_v x_iv = k exactly for one set after a walk/snap step.
void repair_set(std::vector<double>& xs, int k, std::size_t set_index) {
  double ones = 0.0;
  std::vector<std::size_t> floating;
  for (std::size_t v = 0; v < xs.size(); ++v) {
    if (is_floating(xs[v]))
      floating.push_back(v);
    else
      ones += xs[v];
  }
  double target = static_cast<double>(k) - ones;
  if (floating.empty()) {
    if (std::abs(target) > 1e-6) {
      std::ostringstream os;
      os << "set " << set_index << ": cardinality constraint drifted by " << target;
      throw std::runtime_error(os.str());
    }
    return;
  }
  if (floating.size() == 1) {
    // a lone fractional value is forced integral by the cardinality constraint
    double rounded = std::round(xs[floating[0]]);
    if (std::abs(xs[floating[0]] - rounded) > 1e-6 || std::abs(rounded - target) > 1e-6) {
      std::ostringstream os;
      os << "set " << set_index << ": single floating value " << xs[floating[0]]
         << " is not integral";
      throw std::runtime_error(os.str());
    }
    xs[floating[0]] = rounded;
    return;
  }
  double s = 0.0;
  for (std::size_t v : floating) s += xs[v];
  double corr = (target - s) / static_cast<double>(floating.size());
  for (std::size_t v : floating) xs[v] = std::min(1.0, std::max(0.0, xs[v] + corr));
}

}  // namespace

std::vector<std::vector<std::size_t>> k_subset_rounding(const SetSequence& sets, int k,
                                                        RoundingStats* stats) {
  sets.validate();
  if (k < 1) throw std::invalid_argument("k_subset_rounding: k must be positive");
  const std::size_t N = sets.sets.size();
  for (std::size_t i = 0; i < N; ++i)
    if (static_cast<std::size_t>(k) > sets.sets[i].size()) {
      std::ostringstream os;
      os << "k_subset_rounding: k = " << k << " exceeds |V_" << i << "| = " << sets.sets[i].size();
      throw std::invalid_argument(os.str());
    }

  std::vector<std::vector<std::size_t>> result(N);
  if (N == 0) return result;

  std::vector<std::vector<double>> x(N);
  for (std::size_t i = 0; i < N; ++i)
    x[i].assign(sets.sets[i].size(), static_cast<double>(k) / static_cast<double>(sets.sets[i].size()));

  const std::size_t d = sets.d;
  std::size_t n = 1;  // active prefix

  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> floating;
    std::vector<std::size_t> active;  // sets i < n with a floating entry
    for (std::size_t i = 0; i < n; ++i) {
      bool any = false;
      for (std::size_t v = 0; v < x[i].size(); ++v)
        if (is_floating(x[i][v])) {
          floating.emplace_back(i, v);
          any = true;
        }
      if (any) active.push_back(i);
    }

    std::optional<KernelDirection> dir;
    if (!floating.empty()) {
      ColumnSystem sys;
      sys.rows = d + active.size();
      sys.columns.reserve(floating.size());
      for (const auto& [i, v] : floating) {
        std::vector<double> col(sys.rows, 0.0);
        const Vec& w = sets.sets[i][v];
        std::copy(w.begin(), w.end(), col.begin());
        auto pos = std::lower_bound(active.begin(), active.end(), i) - active.begin();
        col[d + static_cast<std::size_t>(pos)] = 1.0;
        sys.columns.push_back(col);
      }
      dir = kernel_direction(sys);
      if (!dir && floating.size() > sys.rows)
        throw std::runtime_error("k_subset_rounding: wide system reported full column rank");
    }

    if (!dir) {
      // stall: the prefix may advance without touching variables beyond n
      if (stats) {
        ++stats->stalls;
        stats->max_floating_at_stall = std::max(stats->max_floating_at_stall, floating.size());
      }
      if (n < N) {
        ++n;
        continue;
      }
      break;
    }

    std::vector<double> beta(floating.size());
    for (std::size_t j = 0; j < floating.size(); ++j)
      beta[j] = x[floating[j].first][floating[j].second];
    BoxWalk walk = box_walk(beta, *dir, 0.0, 1.0, kSnapEps);
    apply_walk(beta, *dir, walk, 0.0, 1.0);
    for (std::size_t j = 0; j < floating.size(); ++j)
      x[floating[j].first][floating[j].second] = beta[j];
    for (std::size_t i : active) repair_set(x[i], k, i);
  }

  // Final rounding: each set's leftover fractional mass is an integer; give it
  // to the largest entries (ties -> smaller member index).
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<std::size_t> floating;
    double s = 0.0;
    for (std::size_t v = 0; v < x[i].size(); ++v)
      if (is_floating(x[i][v])) {
        floating.push_back(v);
        s += x[i][v];
      }
    if (!floating.empty()) {
      auto m = static_cast<long long>(std::llround(s));
      if (std::abs(s - static_cast<double>(m)) > 1e-6)
        throw std::runtime_error("k_subset_rounding: non-integral leftover mass");
      std::stable_sort(floating.begin(), floating.end(),
                       [&](std::size_t a, std::size_t b) { return x[i][a] > x[i][b]; });
      for (std::size_t j = 0; j < floating.size(); ++j)
        x[i][floating[j]] = (static_cast<long long>(j) < m) ? 1.0 : 0.0;
    }
    for (std::size_t v = 0; v < x[i].size(); ++v)
      if (x[i][v] == 1.0) result[i].push_back(v);
    if (result[i].size() != static_cast<std::size_t>(k))
      throw std::runtime_error("k_subset_rounding: rounded subset has wrong cardinality");
  }
  return result;
}

namespace {

void selection_recurse(const SetSequence& sets, const std::vector<std::vector<std::size_t>>& members,
                       int r, int class_offset, const CTable& table, Selection& sel) {
  const std::size_t N = members.size();
  if (r == 1) {
    for (std::size_t i = 0; i < N; ++i)
      sel.chi[i][static_cast<std::size_t>(class_offset)] = members[i][0];
    return;
  }
  auto [r1, r2] = table.split(r);

  SetSequence sub;
  sub.d = sets.d;
  sub.norm = sets.norm;
  sub.sets.resize(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t m : members[i]) sub.sets[i].push_back(sets.sets[i][m]);

  auto chosen = k_subset_rounding(sub, r1);

  std::vector<std::vector<std::size_t>> left(N), right(N);
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<char> picked(members[i].size(), 0);
    for (std::size_t pos : chosen[i]) picked[pos] = 1;
    for (std::size_t pos = 0; pos < members[i].size(); ++pos)
      (picked[pos] ? left : right)[i].push_back(members[i][pos]);
  }
  selection_recurse(sets, left, r1, class_offset, table, sel);
  selection_recurse(sets, right, r2, class_offset + r1, table, sel);
}

DiscrepancyReport prefix_class_discrepancy(const SetSequence& sets, const Selection& sel,
                                           bool centered, double bound, double slack) {
  const std::size_t N = sets.sets.size();
  const int r = sel.r;
  if (sel.chi.size() != N) throw std::invalid_argument("selection: chi size mismatch");
  for (std::size_t i = 0; i < N; ++i) {
    if (sel.chi[i].size() != static_cast<std::size_t>(r))
      throw std::invalid_argument("selection: chi row has wrong length");
    std::vector<char> seen(sets.sets[i].size(), 0);
    for (std::size_t m : sel.chi[i]) {
      if (m >= sets.sets[i].size()) throw std::invalid_argument("selection: member index out of range");
      if (seen[m]) throw std::invalid_argument("selection: repeated member index");
      seen[m] = 1;
    }
  }

  DiscrepancyReport rep;
  rep.slack = slack;
  rep.bound = (bound < 0.0) ? 5.0 * static_cast<double>(sets.d) : bound;
  rep.per_class_max.assign(static_cast<std::size_t>(r), 0.0);

  std::vector<CompensatedVec> class_sum(static_cast<std::size_t>(r), CompensatedVec(sets.d));
  Vec centering(sets.d);
  for (std::size_t i = 0; i < N; ++i) {
    if (centered) {
      std::fill(centering.begin(), centering.end(), 0.0);
      for (const auto& w : sets.sets[i])
        for (std::size_t c = 0; c < sets.d; ++c) centering[c] += w[c];
      for (std::size_t c = 0; c < sets.d; ++c)
        centering[c] /= static_cast<double>(sets.sets[i].size());
    }
    for (int l = 0; l < r; ++l) {
      auto& acc = class_sum[static_cast<std::size_t>(l)];
      acc.add(sets.sets[i][sel.chi[i][static_cast<std::size_t>(l)]]);
      if (centered) acc.add_scaled(centering, -1.0);
      double v = norm(acc.value(), sets.norm);
      if (v > rep.per_class_max[static_cast<std::size_t>(l)])
        rep.per_class_max[static_cast<std::size_t>(l)] = v;
      if (v > rep.achieved) {
        rep.achieved = v;
        rep.worst_class = l + 1;
        rep.worst_prefix = i + 1;
      }
    }
  }
  rep.pass = rep.achieved <= rep.bound * (1.0 + slack);
  return rep;
}

}  // namespace

Selection r_selection(const SetSequence& sets, int r, const CTable& table) {
  sets.validate();
  if (r < 1) throw std::invalid_argument("r_selection: r must be positive");
  if (table.r_max < r) throw std::invalid_argument("r_selection: CTable too small");
  const std::size_t N = sets.sets.size();
  for (std::size_t i = 0; i < N; ++i)
    if (sets.sets[i].size() < static_cast<std::size_t>(r)) {
      std::ostringstream os;
      os << "r_selection: |V_" << i << "| = " << sets.sets[i].size() << " < r = " << r;
      throw std::invalid_argument(os.str());
    }

  bool oversize = false;
  for (const auto& s : sets.sets)
    if (s.size() > static_cast<std::size_t>(r)) oversize = true;

  std::vector<std::vector<std::size_t>> members(N);
  if (oversize) {
    members = k_subset_rounding(sets, r);
  } else {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t v = 0; v < sets.sets[i].size(); ++v) members[i].push_back(v);
  }

  Selection sel;
  sel.r = r;
  sel.chi.assign(N, std::vector<std::size_t>(static_cast<std::size_t>(r), 0));
  selection_recurse(sets, members, r, 0, table, sel);
  return sel;
}

DiscrepancyReport selection_discrepancy(const SetSequence& sets, const Selection& sel,
                                        double bound, double slack) {
  return prefix_class_discrepancy(sets, sel, /*centered=*/true, bound, slack);
}

DiscrepancyReport uncentered_discrepancy(const SetSequence& sets, const Selection& sel,
                                         double bound, double slack) {
  return prefix_class_discrepancy(sets, sel, /*centered=*/false, bound, slack);
}

ZeroSumSelection zero_sum_selection(const SetSequence& sets, int r, const CTable& table) {
  for (std::size_t i = 0; i < sets.sets.size(); ++i) {
    Vec sum(sets.d, 0.0);
    for (const auto& w : sets.sets[i])
      for (std::size_t c = 0; c < sets.d; ++c) sum[c] += w[c];
    if (norm(sum, sets.norm) > 1e-9) {
      std::ostringstream os;
      os << "zero_sum_selection: set " << i << " does not sum to zero (norm "
         << norm(sum, sets.norm) << ")";
      throw std::invalid_argument(os.str());
    }
  }
  ZeroSumSelection out;
  out.selection = r_selection(sets, r, table);
  out.uncentered = uncentered_discrepancy(sets, out.selection);
  return out;
}

}  // namespace vecbal
