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

#include "commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "frakpascal/cli/cli.hpp"
#include "frakpascal/errors.hpp"
#include "frakpascal/exact.hpp"
#include "frakpascal/format.hpp"
#include "frakpascal/sequence.hpp"
#include "frakpascal/transform.hpp"
#include "frakpascal/triangular.hpp"
#include "frakpascal/wide.hpp"

namespace frakpascal::cli {

namespace {

// Random samples are reproducible run to run: fixed seed, and the mapping
// from raw 64-bit words to doubles is spelled out instead of relying on
// std::uniform_real_distribution, whose output varies between libraries.
constexpr std::uint64_t kSeed = 0x5eed'f4a5'ca11ULL;
constexpr std::size_t kSamples = 100;

class Sampler {
 public:
  Sampler() : gen_(kSeed) {}
  // Uniform in [-1, 1).
  double next() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-52 - 1.0;
  }
  // Uniform in [1, m].
  std::size_t length(std::size_t m) { return 1 + gen_() % m; }

  std::vector<double> sequence(std::size_t max_len) {
    std::vector<double> x(length(max_len));
    for (double& v : x) {
      v = next();
    }
    return x;
  }

 private:
  std::mt19937_64 gen_;
};

Json header(std::string_view command, const Config& c, bool with_tau,
            bool with_p) {
  Json h;
  h["command"] = std::string(command);
  if (with_tau) {
    h["tau"] = c.tau;
  }
  if (with_p) {
    h["p"] = json_exponent(c.p);
  }
  h["n"] = c.n;
  return h;
}

std::vector<exact::Rational> to_rationals(std::span<const double> x) {
  std::vector<exact::Rational> out;
  out.reserve(x.size());
  for (double v : x) {
    out.push_back(exact::to_rational(v));
  }
  return out;
}

std::vector<double> to_doubles(const std::vector<exact::Rational>& x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const auto& v : x) {
    out.push_back(v.convert_to<double>());
  }
  return out;
}

double sup_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

// max_i |a_i - b_i| over the common horizon, missing entries read as 0.
double max_gap(std::span<const double> a, std::span<const double> b,
               std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    m = std::max(m, std::abs(x - y));
  }
  return m;
}

std::vector<std::vector<double>> samples_or(
    const std::optional<std::vector<double>>& input, std::size_t max_len,
    std::size_t count) {
  if (input) {
    return {*input};
  }
  Sampler s;
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(s.sequence(max_len));
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify suites

void suite_identity(const Config& c, bool report_star, VerifyReport& r,
                    Json& h) {
  const FracOrder tau = order_of(c.tau);
  if (c.mode == Mode::kExact && tau.is_integer()) {
    const exact::BigInt residual = exact::identity_residual(tau, c.n);
    h["precision"] = "exact";
    r.checks.push_back(
        make_check("residual", residual.convert_to<double>(), "==", 0.0));
  } else {
    h["precision"] = "float";
    r.checks.push_back(
        make_check("residual", identity_residual(tau, c.n), "<=", 1e-8));
  }
  if (!report_star) {
    return;
  }

  // Small entries: computed, the closed forms, and the starred display.
  const double t = c.tau;
  struct Entry {
    std::size_t n, k;
    double closed_form;
    double star;
  };
  const std::array<Entry, 3> entries = {{
      {1, 0, 1.0 - t, 2.0 - t},
      {2, 0, 1.0 - 2.0 * t + t * (t - 1.0) / 2.0,
       3.0 - 3.0 * t + t * (t - 1.0) / 2.0},
      {2, 1, 2.0 - t, 3.0 - t},
  }};
  const DenseTriangle forward = truncate(phat_operator(tau), 3);
  const DenseTriangle inverse = truncate(phat_inv_operator(tau), 3);
  DenseTriangle starred = forward;
  for (const auto& e : entries) {
    const std::string at =
        "(" + std::to_string(e.n) + "," + std::to_string(e.k) + ")";
    const double computed = forward(e.n, e.k);
    r.checks.push_back(make_info("phat" + at, computed));
    r.checks.push_back(make_info("phat" + at + ".closed-form", e.closed_form));
    r.checks.push_back(make_info("phat" + at + ".star", e.star));
    r.checks.push_back(make_check(
        "phat" + at + ".closed-form-gap",
        std::abs(computed - e.closed_form) / std::max(1.0, std::abs(e.closed_form)),
        "<=", 1e-12));
    starred.at(e.n, e.k) = e.star;
  }
  // Unscaled 3x3 residuals: with the starred entries, (1,0) of the product
  // is off by exactly 1 for every tau.
  const auto abs_residual = [](const DenseTriangle& a, const DenseTriangle& b) {
    const DenseTriangle prod = multiply(a, b);
    double worst = 0.0;
    for (std::size_t n = 0; n < prod.size(); ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        worst = std::max(worst, std::abs(prod(n, k) - (n == k ? 1.0 : 0.0)));
      }
    }
    return worst;
  };
  r.checks.push_back(make_check("residual3.closed-form",
                                abs_residual(forward, inverse), "<=", 1e-10));
  r.checks.push_back(
      make_check("residual3.star", abs_residual(starred, inverse), ">=", 0.5));
}

void suite_roundtrip(const Config& c,
                     const std::optional<std::vector<double>>& input,
                     VerifyReport& r, Json& h) {
  const FracOrder tau = order_of(c.tau);
  const auto xs = samples_or(input, std::min<std::size_t>(32, c.n), kSamples);
  h["precision"] = std::string(to_string(c.mode));
  double worst = 0.0;
  const auto record = [&](const Prefix& back, const std::vector<double>& x) {
    worst = std::max(worst, max_gap(back, x, c.n) / std::max(1.0, sup_norm(x)));
  };
  if (c.mode == Mode::kExact) {
    for (const auto& x : xs) {
      const auto y = exact::apply(tau, to_rationals(x), c.n);
      record(to_doubles(exact::inverse_apply(tau, y, c.n)), x);
    }
  } else if (c.mode == Mode::kWide) {
    const wide::WideTransform t(tau, c.n);
    for (const auto& x : xs) {
      record(wide::narrow(t.inverse_apply(t.apply(wide::widen(x)))), x);
    }
  } else {
    // y is rounded to double in between; past n ~ 20 the inverse cannot
    // recover x from it (see --precision wide).
    const PhatTransform t(tau, c.n);
    for (const auto& x : xs) {
      record(t.inverse_apply(t.apply(x)), x);
    }
  }
  r.checks.push_back(make_info("samples", static_cast<double>(xs.size())));
  r.checks.push_back(make_check("max-relative-error", worst, "<=", 1e-8));
}

void suite_parallelogram(const Config& c, VerifyReport& r, Json& h) {
  const FracOrder tau = order_of(c.tau);
  // Pass/fail is decided on the exact witnesses; the double-precision
  // evaluation is reported alongside for comparison.
  const ParallelogramSides exact = parallelogram_gap(tau, c.p, c.n, Precision::kExact);
  const ParallelogramSides approx = parallelogram_gap(tau, c.p, c.n, Precision::kFloat);
  h["precision"] = "exact";
  const double expected_rhs =
      c.p.is_infinite() ? 4.0 : 4.0 * std::pow(2.0, 2.0 / c.p.p());
  r.checks.push_back(make_check("lhs", exact.lhs, "==", 8.0));
  r.checks.push_back(make_info("rhs", exact.rhs));
  r.checks.push_back(make_info("rhs.expected", expected_rhs));
  r.checks.push_back(make_check(
      "rhs.relative-deviation", std::abs(exact.rhs - expected_rhs) / expected_rhs,
      "<=", 1e-12));
  const double gap = std::abs(exact.lhs - exact.rhs);
  if (!c.p.is_infinite() && c.p.p() == 2.0) {
    r.checks.push_back(make_check("gap", gap, "<=", 1e-12));
  } else {
    r.checks.push_back(make_check("gap", gap, ">", 0.0));
  }
  r.checks.push_back(make_info("lhs.float", approx.lhs));
  r.checks.push_back(make_info("rhs.float", approx.rhs));
}

void suite_schauder(const Config& c,
                    const std::optional<std::vector<double>>& input,
                    VerifyReport& r, Json& h) {
  const FracOrder tau = order_of(c.tau);
  const bool wide_path = c.mode != Mode::kFloat;
  // The exact and wide requests both run in 192-bit arithmetic here.
  h["precision"] = wide_path ? "wide" : "float";
  const std::size_t max_index = std::min<std::size_t>(16, c.n - 1);
  if (input && input->size() > max_index + 1 &&
      std::any_of(input->begin() + static_cast<std::ptrdiff_t>(max_index) + 1,
                  input->end(), [](double v) { return v != 0.0; })) {
    throw UsageError("schauder input must be supported in [0, " +
                     std::to_string(max_index) + "]");
  }
  const auto xs = samples_or(input, max_index + 1, kSamples);
  double worst = 0.0;

  if (wide_path) {
    const wide::WideTransform t(tau, c.n);
    for (std::size_t k : {0, 3, 7, 15}) {
      if (k >= c.n) {
        continue;
      }
      Prefix unit(c.n, 0.0);
      unit[k] = 1.0;
      const Prefix image = wide::narrow(t.apply(t.basis_vector(k)));
      r.checks.push_back(make_check("basis(" + std::to_string(k) + ").image-error",
                                    max_gap(image, unit, c.n), "<=", 1e-9));
    }
    for (const auto& x : xs) {
      const Prefix rebuilt = wide::narrow(t.reconstruct(wide::widen(x), max_index));
      worst = std::max(worst, max_gap(rebuilt, x, max_index + 1));
    }
  } else {
    const PhatTransform t(tau, c.n);
    const DenseTriangle& m = t.forward_matrix();
    for (std::size_t k : {0, 3, 7, 15}) {
      if (k >= c.n) {
        continue;
      }
      // Relative to the largest term of each row sum: the entries of b^(k)
      // carry rounding of their own, and P_hat scales it by up to 2^n.
      const Prefix b = t.basis_vector(k).values;
      const Prefix image = t.apply(b);
      double err = 0.0;
      for (std::size_t n = 0; n < c.n; ++n) {
        double scale = 1.0;
        for (std::size_t j = 0; j <= n; ++j) {
          scale = std::max(scale, std::abs(m(n, j) * b[j]));
        }
        err = std::max(err, std::abs(image[n] - (n == k ? 1.0 : 0.0)) / scale);
      }
      r.checks.push_back(make_check("basis(" + std::to_string(k) + ").image-error",
                                    err, "<=", 1e-9));
    }
    for (const auto& x : xs) {
      const Prefix rebuilt =
          t.reconstruct(FiniteSequence::from_prefix(x), max_index);
      worst = std::max(worst, max_gap(rebuilt, x, max_index + 1));
    }
  }
  r.checks.push_back(
      make_info("reconstruction.terms", static_cast<double>(max_index + 1)));
  r.checks.push_back(make_check("reconstruction.max-error", worst, "<=", 1e-8));
}

void suite_inclusion(const Config& c,
                     const std::optional<std::vector<double>>& input,
                     VerifyReport& r, Json& h) {
  h["precision"] = "float";
  const FracOrder tau = order_of(c.tau);
  const double bound = inclusion_bound(tau, c.p, c.n);
  r.checks.push_back(make_info("bound", bound));
  const PhatTransform t(tau, c.n);
  double worst = 0.0;
  for (const auto& x : samples_or(input, c.n, kSamples)) {
    const Prefix head(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(
                                                 std::min(x.size(), c.n)));
    const double size = p_norm(head, c.p);
    if (size == 0.0) {
      continue;
    }
    worst = std::max(worst, p_norm(t.apply(head), c.p) / (bound * size));
  }
  r.checks.push_back(make_check("max-ratio", worst, "<=", 1.0 + 1e-12));
  if (c.tau == 0.0 && c.p.is_infinite()) {
    r.checks.push_back(make_check("bound.pascal", bound, "==",
                                  std::ldexp(1.0, static_cast<int>(c.n) - 1)));
  }
}

void suite_absoluteness(const Config& c,
                        const std::optional<std::vector<double>>& input,
                        VerifyReport& r, Json& h) {
  h["precision"] = "float";
  const FracOrder tau = order_of(c.tau);
  const std::vector<double> w = input.value_or(std::vector<double>{1.0, -1.0});
  r.checks.push_back(make_check(
      "gap", absoluteness_gap(tau, c.p, FiniteSequence::from_prefix(w), c.n), ">",
      0.0));
  // The nonnegative witness equals its absolute value, so its gap is 0.
  const std::vector<double> ones = {1.0, 1.0};
  r.checks.push_back(make_info(
      "gap.nonnegative-witness",
      absoluteness_gap(tau, c.p, FiniteSequence::from_prefix(ones), c.n)));
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::kFloat:
      return "float";
    case Mode::kWide:
      return "wide";
    case Mode::kExact:
      return "exact";
  }
  return "float";
}

FracOrder order_of(double tau) {
  return tau == 0.0 ? FracOrder::identity() : FracOrder(tau);
}

std::string cmd_matrix(const Config& c, std::string_view which) {
  const FracOrder tau = order_of(c.tau);
  const bool uses_tau = which != "pascal" && which != "pascal-inv";
  Json h = header("matrix", c, uses_tau, false);
  h["which"] = std::string(which);
  if (c.mode == Mode::kExact) {
    if (c.n > exact::kMaxExactSize) {
      throw RangeError("exact matrices are limited to n <= " +
                       std::to_string(exact::kMaxExactSize));
    }
    if (!uses_tau || tau.is_integer()) {
      h["precision"] = "exact";
      const long long m = uses_tau ? exact::integer_order(tau) : 0;
      if (which == "pascal") {
        return render_matrix(exact::pascal(c.n), c.format, std::move(h));
      }
      if (which == "pascal-inv") {
        return render_matrix(exact::pascal_inv(c.n), c.format, std::move(h));
      }
      if (which == "delta") {
        return render_matrix(exact::delta(m, c.n), c.format, std::move(h));
      }
      if (which == "delta-inv") {
        return render_matrix(exact::delta(-m, c.n), c.format, std::move(h));
      }
      if (which == "phat") {
        return render_matrix(exact::phat(tau, c.n), c.format, std::move(h));
      }
      return render_matrix(exact::phat_inv(tau, c.n), c.format, std::move(h));
    }
  }
  h["precision"] = "float";
  TriangularOperator op = identity_operator();
  if (which == "pascal") {
    op = pascal_operator();
  } else if (which == "pascal-inv") {
    op = pascal_inv_operator();
  } else if (which == "delta") {
    op = delta_operator(tau);
  } else if (which == "delta-inv") {
    op = delta_inv_operator(tau);
  } else if (which == "phat") {
    op = phat_operator(tau);
  } else {
    op = phat_inv_operator(tau);
  }
  return render_matrix(truncate(op, c.n), c.format, std::move(h));
}

std::string cmd_transform(const Config& c, const std::vector<double>& input,
                          bool inverse) {
  const FracOrder tau = order_of(c.tau);
  Json h = header("transform", c, true, false);
  h["direction"] = inverse ? "inverse" : "forward";
  h["precision"] = std::string(to_string(c.mode));
  Prefix out;
  if (c.mode == Mode::kExact) {
    const auto x = to_rationals(input);
    out = to_doubles(inverse ? exact::inverse_apply(tau, x, c.n)
                             : exact::apply(tau, x, c.n));
  } else if (c.mode == Mode::kWide) {
    const wide::WideTransform t(tau, c.n);
    const auto x = wide::widen(input);
    out = wide::narrow(inverse ? t.inverse_apply(x) : t.apply(x));
  } else {
    const PhatTransform t(tau, c.n);
    out = inverse ? t.inverse_apply(input) : t.apply(input);
  }
  return render_sequence(out, c.format, std::move(h));
}

std::string cmd_norm(const Config& c, const std::vector<double>& x) {
  const FracOrder tau = order_of(c.tau);
  Json h = header("norm", c, true, true);
  h["precision"] = std::string(to_string(c.mode));
  TruncatedNorm norm{0.0, c.n};
  if (c.mode == Mode::kExact) {
    norm.value =
        p_norm(to_doubles(exact::apply(tau, to_rationals(x), c.n)), c.p);
  } else if (c.mode == Mode::kWide) {
    const wide::WideTransform t(tau, c.n);
    norm.value = p_norm(wide::narrow(t.apply(wide::widen(x))), c.p);
  } else {
    norm = phat_norm(tau, FiniteSequence::from_prefix(x), c.p, c.n);
  }
  return render_record({"norm", "horizon"},
                       {json_number(norm.value), Json(norm.horizon)}, c.format,
                       std::move(h));
}

std::string cmd_basis(const Config& c, std::size_t k) {
  const FracOrder tau = order_of(c.tau);
  if (k >= c.n) {
    throw PreconditionError("basis index k = " + std::to_string(k) +
                            " must be below n = " + std::to_string(c.n));
  }
  Json h = header("basis", c, true, false);
  h["k"] = k;
  h["precision"] = std::string(to_string(c.mode));
  Prefix values;
  if (c.mode == Mode::kExact) {
    std::vector<exact::Rational> unit(k + 1, 0);
    unit[k] = 1;
    values = to_doubles(exact::inverse_apply(tau, unit, c.n));
  } else if (c.mode == Mode::kWide) {
    values = wide::narrow(wide::WideTransform(tau, c.n).basis_vector(k));
  } else {
    values = basis_vector(tau, k, c.n).values;
  }
  return render_sequence(values, c.format, std::move(h));
}

VerifyOutcome cmd_verify(const Config& c, std::string_view suite,
                         bool report_star,
                         const std::optional<std::vector<double>>& input) {
  Json h = header("verify", c, true, true);
  h["suite"] = std::string(suite);
  VerifyReport r;
  if (suite == "identity") {
    suite_identity(c, report_star, r, h);
  } else if (suite == "roundtrip") {
    suite_roundtrip(c, input, r, h);
  } else if (suite == "parallelogram") {
    suite_parallelogram(c, r, h);
  } else if (suite == "schauder") {
    suite_schauder(c, input, r, h);
  } else if (suite == "inclusion") {
    suite_inclusion(c, input, r, h);
  } else if (suite == "absoluteness") {
    suite_absoluteness(c, input, r, h);
  } else {
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  }
  return {render_verify(r, c.format, std::move(h)), r.passed()};
}

std::string cmd_dual(const Config& c, std::string_view which,
                     const std::vector<double>& a) {
  DualKind kind = DualKind::kBeta;
  std::vector<std::string> sets = {"d2", "d3", "d4"};
  if (which == "alpha") {
    kind = DualKind::kAlpha;
    sets = {"d1"};
  } else if (which == "gamma") {
    kind = DualKind::kGamma;
  } else if (which != "beta") {
    throw UsageError("unknown dual '" + std::string(which) + "'");
  }
  // The header leaves out `which`: the gamma report is the beta report.
  Json h = header("dual", c, true, true);
  const auto reports = dual_reports(kind, order_of(c.tau),
                                    FiniteSequence::from_prefix(a), c.p, c.n);
  return render_dual(reports, sets, c.format, std::move(h));
}

}  // namespace frakpascal::cli
