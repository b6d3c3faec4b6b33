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

#include <cstddef>
#include <span>

#include "frakpascal/coeffs.hpp"
#include "frakpascal/sequence.hpp"
#include "frakpascal/transform.hpp"

namespace frakpascal {

/// Exponent p in [1, inf] together with its conjugate q (1/p + 1/q = 1).
class PExponent {
 public:
  /// PreconditionError unless p >= 1 (p = +inf allowed).
  explicit PExponent(double p);
  static PExponent infinity();

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  bool is_infinite() const noexcept;

 private:
  double p_;
  double q_;
};

/// l_p norm of a prefix; sup of absolute values for p = inf.
double p_norm(std::span<const double> x, const PExponent& p);

/// A norm of a transform truncated at `horizon` terms.
struct TruncatedNorm {
  double value;
  std::size_t horizon;
};

/// ||x||_{l_p(P_hat)} = ||P_hat x||_p evaluated on the first N terms of P_hat x.
TruncatedNorm phat_norm(const PhatTransform& t, const FiniteSequence& x,
                        const PExponent& p);
TruncatedNorm phat_norm(const FracOrder& tau, const FiniteSequence& x,
                        const PExponent& p, std::size_t n);

struct ParallelogramSides {
  double lhs;  // ||u+v||^2 + ||u-v||^2
  double rhs;  // 2 (||u||^2 + ||v||^2)
};

enum class Precision {
  /// Double arithmetic on the truncated matrices.
  kFloat,
  /// Exact rational arithmetic up to the final norm evaluation.
  kExact,
};

/// Both sides of the parallelogram law in l_p(P_hat) for the witnesses
/// u = P_hat^{-1}(1, 1, 0, ...) and v = P_hat^{-1}(1, -1, 0, ...).
///
/// In kFloat the witness images pick up rounding of order
/// eps * ||P_hat|| * ||P_hat^{-1}||, which is visible at p = 1 once the
/// horizon passes ~20. kExact forms the witnesses and their images in
/// rational arithmetic, so lhs is exactly 8.
/// PreconditionError when n < 2.
ParallelogramSides parallelogram_gap(const FracOrder& tau, const PExponent& p,
                                     std::size_t n,
                                     Precision precision = Precision::kFloat);

/// |phat_norm(w) - phat_norm(|w|)|.
double absoluteness_gap(const FracOrder& tau, const PExponent& p,
                        const FiniteSequence& w, std::size_t n);

/// Constant B_N with ||P_hat x||_p <= B_N ||x||_p for x supported in [0, N),
/// both sides truncated at N: the l_p norm of the absolute row sums of the
/// N x N truncation (their maximum for p = inf).
double inclusion_bound(const FracOrder& tau, const PExponent& p, std::size_t n);

}  // namespace frakpascal
