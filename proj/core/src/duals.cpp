// Copyright 2026 The frakpascal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frakpascal/duals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frakpascal/errors.hpp"

namespace frakpascal {

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::kSubsetSupL1:
      return "subset-sup-l1";
    case Statistic::kRowQSumSup:
      return "row-q-sum-sup";
    case Statistic::kRowAbsSumSup:
      return "row-abs-sum-sup";
    case Statistic::kColumnLimitOscillation:
      return "column-limit-oscillation";
    case Statistic::kLimitDeviationSum:
      return "limit-deviation-sum";
    case Statistic::kBracketQSum:
      return "bracket-q-sum";
    case Statistic::kBracketSup:
      return "bracket-sup";
    case Statistic::kBracketTail:
      return "bracket-tail";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kStabilized:
      return "stabilized";
    case Verdict::kGrowing:
      return "growing";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

bool same(double a, double b) {
  return std::abs(a - b) <=
         kStabilizationTolerance * std::max(std::abs(a), std::abs(b));
}

void check_horizon(const DenseTriangle& a, std::size_t n) {
  if (n == 0 || n > a.size()) {
    throw PreconditionError("statistic horizon " + std::to_string(n) +
                            " must be in [1, " + std::to_string(a.size()) +
                            "]");
  }
}

double q_power_sum(std::span<const double> values, double q) {
  double acc = 0.0;
  if (std::isinf(q)) {
    for (double v : values) {
      acc = std::max(acc, std::abs(v));
    }
    return acc;
  }
  for (double v : values) {
    acc += (q == 1.0) ? std::abs(v) : std::pow(std::abs(v), q);
  }
  return acc;
}

ConditionReport make_report(Statistic s, std::vector<double> values,
                            std::size_t horizon) {
  const Verdict v = classify(values);
  return {s, std::move(values), horizon, v};
}

}  // namespace

Verdict classify(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) {
    return Verdict::kStabilized;
  }
  const std::size_t window = std::min(n, std::max<std::size_t>(2, (n + 3) / 4));
  const auto tail = values.subspan(n - window);
  const double last = tail.back();
  if (std::all_of(tail.begin(), tail.end(),
                  [last](double v) { return same(v, last); })) {
    return Verdict::kStabilized;
  }
  const bool nondecreasing = std::is_sorted(tail.begin(), tail.end());
  if (nondecreasing && last > tail.front()) {
    return Verdict::kGrowing;
  }
  return Verdict::kInconclusive;
}

DenseTriangle alpha_matrix(const FracOrder& tau, const FiniteSequence& a,
                           std::size_t n) {
  const DenseTriangle inv = truncate(phat_inv_operator(tau), n);
  DenseTriangle u(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double ar = a[r];
    if (ar == 0.0) {
      continue;
    }
    for (std::size_t k = 0; k <= r; ++k) {
      u.at(r, k) = ar * inv(r, k);
    }
  }
  return u;
}

DenseTriangle beta_matrix(const FracOrder& tau, const FiniteSequence& a,
                          std::size_t n) {
  const DenseTriangle inv = truncate(phat_inv_operator(tau), n);
  DenseTriangle v(n);
  // Row r extends row r-1 by the single term j = r.
  for (std::size_t r = 0; r < n; ++r) {
    const double ar = a[r];
    for (std::size_t k = 0; k <= r; ++k) {
      const double previous = (k < r) ? v(r - 1, k) : 0.0;
      v.at(r, k) = previous + inv(r, k) * ar;
    }
  }
  return v;
}

ConditionReport stat_subset_sup_l1(const DenseTriangle& a,
                                   std::size_t max_column, std::size_t n) {
  if (max_column > kMaxSubsetColumn) {
    throw BudgetError("subset enumeration over columns 0.." +
                      std::to_string(max_column) + " exceeds the budget (" +
                      std::to_string(kMaxSubsetColumn) + ")");
  }
  check_horizon(a, n);
  const std::size_t columns = std::min(max_column + 1, n);
  std::vector<double> best(n, 0.0);
  std::vector<std::size_t> chosen;
  chosen.reserve(columns);
  for (std::size_t mask = 1; mask < (std::size_t{1} << columns); ++mask) {
    chosen.clear();
    for (std::size_t k = 0; k < columns; ++k) {
      if (mask & (std::size_t{1} << k)) {
        chosen.push_back(k);
      }
    }
    double cumulative = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double s = 0.0;
      for (std::size_t k : chosen) {
        s += a(r, k);
      }
      cumulative += std::abs(s);
      best[r] = std::max(best[r], cumulative);
    }
  }
  return make_report(Statistic::kSubsetSupL1, std::move(best), n);
}

SubsetBounds subset_sup_bounds(const DenseTriangle& a, std::size_t max_column,
                               std::size_t n) {
  check_horizon(a, n);
  const std::size_t columns = std::min(max_column + 1, n);
  SubsetBounds b{0.0, 0.0};
  for (std::size_t k = 0; k < columns; ++k) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      col += std::abs(a(r, k));
    }
    b.column_max = std::max(b.column_max, col);
  }
  for (std::size_t r = 0; r < n; ++r) {
    double row = 0.0;
    for (std::size_t k = 0; k < columns; ++k) {
      row += std::abs(a(r, k));
    }
    b.total_abs += row;
  }
  return b;
}

ConditionReport stat_row_qsum_sup(const DenseTriangle& a, double q,
                                  std::size_t n) {
  if (std::isnan(q) || q < 1.0) {
    throw PreconditionError("row q-sum needs q >= 1");
  }
  check_horizon(a, n);
  std::vector<double> sup(n, 0.0);
  double running = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    running = std::max(running, q_power_sum(a.row(r), q));
    sup[r] = running;
  }
  const Statistic s =
      (q == 1.0) ? Statistic::kRowAbsSumSup : Statistic::kRowQSumSup;
  return make_report(s, std::move(sup), n);
}

ColumnLimitReport stat_column_limits(const DenseTriangle& a, std::size_t n) {
  if (n < 8) {
    throw PreconditionError("column limit diagnostics need a horizon >= 8");
  }
  check_horizon(a, n);
  const std::size_t tail_start = n - (n + 3) / 4;

  std::vector<double> oscillation(tail_start, 0.0);
  for (std::size_t k = 0; k < tail_start; ++k) {
    double lo = a(tail_start, k);
    double hi = lo;
    for (std::size_t r = tail_start + 1; r < n; ++r) {
      lo = std::min(lo, a(r, k));
      hi = std::max(hi, a(r, k));
    }
    oscillation[k] = hi - lo;
  }

  std::vector<double> deviation(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      sum += std::abs(a(r, k) - a(n - 1, k));
    }
    deviation[r] = sum;
  }

  return {make_report(Statistic::kColumnLimitOscillation,
                      std::move(oscillation), n),
          make_report(Statistic::kLimitDeviationSum, std::move(deviation), n)};
}

DualMembershipReport dual_membership_report(const FracOrder& tau,
                                            const FiniteSequence& a,
                                            const PExponent& p,
                                            std::size_t n) {
  if (p.p() == 1.0) {
    throw PreconditionError(
        "dual characterization covers 1 < p <= inf only");
  }
  const double q = p.q();
  const DenseTriangle u = alpha_matrix(tau, a, n);
  const DenseTriangle v = beta_matrix(tau, a, n);

  std::vector<double> bracket_sum(n, 0.0);
  std::vector<double> bracket_sup(n, 0.0);
  double running = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = v.row(r);
    bracket_sum[r] = q_power_sum(row.first(r), q);
    running = std::max(running, q_power_sum(row, kInfinity));
    bracket_sup[r] = running;
  }
  std::vector<double> tail(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    tail[k] = std::abs(v(n - 1, k));
  }

  return {stat_row_qsum_sup(u, q, n),
          make_report(Statistic::kBracketQSum, std::move(bracket_sum), n),
          make_report(Statistic::kBracketSup, std::move(bracket_sup), n),
          make_report(Statistic::kBracketTail, std::move(tail), n)};
}

std::vector<ConditionReport> dual_reports(DualKind kind, const FracOrder& tau,
                                          const FiniteSequence& a,
                                          const PExponent& p, std::size_t n) {
  DualMembershipReport r = dual_membership_report(tau, a, p, n);
  if (kind == DualKind::kAlpha) {
    return {std::move(r.d1)};
  }
  // gamma shares the beta characterization.
  return {std::move(r.d2), std::move(r.d3), std::move(r.d4)};
}

}  // namespace frakpascal
