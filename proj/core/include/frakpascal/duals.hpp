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

#pragma once

// Truncated diagnostics for the alpha-, beta- and gamma-duals of l_p(P_hat).
//
// Membership in a dual is a statement about sup/lim over all of N, which no
// finite truncation decides. Every condition is therefore reported as a
// sequence of truncated statistics with a stabilization hint, never as a
// yes/no answer.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "frakpascal/coeffs.hpp"
#include "frakpascal/sequence.hpp"
#include "frakpascal/spaces.hpp"
#include "frakpascal/triangular.hpp"

namespace frakpascal {

enum class Statistic {
  kSubsetSupL1,             // sup_K sum_n |sum_{k in K} a_nk|
  kRowQSumSup,              // sup_n sum_k |a_nk|^q
  kRowAbsSumSup,            // sup_n sum_k |a_nk|
  kColumnLimitOscillation,  // spread of each column over the tail rows
  kLimitDeviationSum,       // sum_k |a_nk - lim_n a_nk|
  kBracketQSum,             // sum_k |v_{nk}|^q, k < n
  kBracketSup,              // sup |v_{nk}|
  kBracketTail,             // |v_{N-1,k}| as k grows
};

enum class Verdict { kStabilized, kGrowing, kInconclusive };

std::string_view to_string(Statistic s);
std::string_view to_string(Verdict v);

/// Tolerance (relative) under which the tail of a statistic counts as constant.
inline constexpr double kStabilizationTolerance = 1e-10;

/// A truncated statistic.
///
/// For sup-type statistics (subset-sup, row sums, bracket sup) values[h-1]
/// is the statistic over the first h rows and the sequence is nondecreasing.
/// Column oscillations are indexed by column, deviation sums by row and the
/// bracket tail by column of the last row.
struct ConditionReport {
  Statistic statistic;
  std::vector<double> values;
  std::size_t horizon;
  Verdict verdict;

  friend bool operator==(const ConditionReport&,
                         const ConditionReport&) = default;
};

/// Stabilized if the last quarter (at least two terms) is constant to
/// kStabilizationTolerance, growing if that tail is nondecreasing and ends
/// strictly higher, inconclusive otherwise.
Verdict classify(std::span<const double> values);

/// U with u_nk = a_n P_hat^{-1}(n, k), so that (U y)_n = a_n x_n for
/// x = P_hat^{-1} y.
DenseTriangle alpha_matrix(const FracOrder& tau, const FiniteSequence& a,
                           std::size_t n);

/// V with v_nk = sum_{j=k}^{n} P_hat^{-1}(j, k) a_j, so that
/// sum_{k<=n} a_k x_k = (V y)_n for x = P_hat^{-1} y.
DenseTriangle beta_matrix(const FracOrder& tau, const FiniteSequence& a,
                          std::size_t n);

/// Largest subset size accepted by stat_subset_sup_l1 is max_column + 1 with
/// max_column <= kMaxSubsetColumn.
inline constexpr std::size_t kMaxSubsetColumn = 16;

/// Brute force over every K subset of {0, ..., max_column} of
/// sum_{n<h} |sum_{k in K} A(n, k)|, for h = 1..n.
/// BudgetError when max_column > kMaxSubsetColumn, PreconditionError when
/// n is 0 or exceeds a.size().
ConditionReport stat_subset_sup_l1(const DenseTriangle& a,
                                   std::size_t max_column, std::size_t n);

/// Bounds that bracket the subset statistic at horizon n: the largest
/// single-column absolute sum and the total absolute sum over the same
/// columns. Summation order matches stat_subset_sup_l1, so
/// column_max <= statistic <= total_abs holds in floating point too.
struct SubsetBounds {
  double column_max;
  double total_abs;
};
SubsetBounds subset_sup_bounds(const DenseTriangle& a, std::size_t max_column,
                               std::size_t n);

/// Running sup over rows of sum_k |A(n, k)|^q (row max of |A(n, k)| when q is
/// infinite). q == 1 is labelled kRowAbsSumSup.
ConditionReport stat_row_qsum_sup(const DenseTriangle& a, double q,
                                  std::size_t n);

struct ColumnLimitReport {
  /// Oscillation (max - min) of each column over the last quarter of rows,
  /// for the columns that lie entirely below that window.
  ConditionReport oscillation;
  /// D_r = sum_{k < n-1} |A(r, k) - A(n-1, k)| for every row r < n, the
  /// column limits being estimated by the final row.
  ConditionReport deviation;
};

/// PreconditionError when n < 8 or n > a.size().
ColumnLimitReport stat_column_limits(const DenseTriangle& a, std::size_t n);

/// Statistics for the sets D1..D4 at one truncation.
struct DualMembershipReport {
  ConditionReport d1;  // row q-sums of U
  ConditionReport d2;  // q-sum of the off-diagonal bracket of V
  ConditionReport d3;  // sup of the bracket
  ConditionReport d4;  // decay of the bracket along the last row
};

/// PreconditionError for p = 1, where the characterization does not apply.
DualMembershipReport dual_membership_report(const FracOrder& tau,
                                            const FiniteSequence& a,
                                            const PExponent& p, std::size_t n);

enum class DualKind { kAlpha, kBeta, kGamma };

/// Reports characterizing one dual: alpha -> {D1}, beta -> {D2, D3, D4}.
/// The gamma-dual has the same characterization as the beta-dual and is
/// produced by the same code path.
std::vector<ConditionReport> dual_reports(DualKind kind, const FracOrder& tau,
                                          const FiniteSequence& a,
                                          const PExponent& p, std::size_t n);

}  // namespace frakpascal
