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

#include "frakpascal/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "frakpascal/errors.hpp"

namespace frakpascal::cli {

namespace {

constexpr const char* kDefaultTau = "0.5";

struct Options {
  std::optional<std::string> tau;
  std::optional<std::string> n;
  std::optional<std::string> p;
  std::string format = "csv";
  std::string precision = "float";
  std::optional<std::string> input;
  std::optional<std::string> output;

  std::string which;
  std::string direction = "forward";
  std::string suite;
  std::optional<std::string> k;
  bool report_star = false;
};

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" +
                     text + "'");
  }
  return value;
}

PExponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") {
    return PExponent::infinity();
  }
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw UsageError("--p must be a real number >= 1 or 'inf', got '" + text +
                     "'");
  }
  return PExponent(value);
}

std::string read_source(const std::optional<std::string>& path) {
  if (!path || *path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(*path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open input '" + *path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Config resolve(const Options& o, const SequenceFile* file, std::size_t max_n) {
  std::string tau_text = kDefaultTau;
  if (o.tau) {
    tau_text = *o.tau;
  } else if (file != nullptr && file->tau) {
    tau_text = *file->tau;
  }
  std::string p_text = "2";
  if (o.p) {
    p_text = *o.p;
  } else if (file != nullptr && file->p) {
    p_text = *file->p;
  }
  const std::size_t n = o.n ? parse_count(*o.n, "--n") : kDefaultN;
  if (n == 0) {
    throw UsageError("--n must be at least 1");
  }
  if (n > max_n) {
    throw UsageError("--n " + std::to_string(n) + " exceeds FRAKPASCAL_MAX_N = " +
                     std::to_string(max_n));
  }
  Config c{parse_order(tau_text), n, parse_exponent(p_text),
           o.format == "json" ? Format::kJson : Format::kCsv,
           o.precision == "exact"  ? Mode::kExact
           : o.precision == "wide" ? Mode::kWide
                                   : Mode::kFloat};
  order_of(c.tau);  // rejects inadmissible orders up front
  return c;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--tau", o.tau,
                  "Order: decimal or rational literal such as 1/3 (default 0.5)");
  sub->add_option("--n", o.n, "Truncation size N (default 32)");
  sub->add_option("--p", o.p, "Exponent p >= 1 or 'inf' (default 2)");
  sub->add_option("--format", o.format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--precision", o.precision,
                  "float (default), wide (192-bit) or exact, each where "
                  "available")
      ->check(CLI::IsMember({"float", "wide", "exact"}));
  sub->add_option("--input", o.input, "Sequence file ('-' for stdin)");
  sub->add_option("--output", o.output, "Write to a file instead of stdout");
}

int dispatch(CLI::App& app, const Options& o, std::string& text,
             std::size_t max_n) {
  const auto sequence = [&]() { return parse_sequence_file(read_source(o.input)); };
  const std::string name = app.get_subcommands().front()->get_name();

  if (name == "matrix") {
    text = cmd_matrix(resolve(o, nullptr, max_n), o.which);
  } else if (name == "transform") {
    const SequenceFile f = sequence();
    text = cmd_transform(resolve(o, &f, max_n), f.values,
                         o.direction == "inverse");
  } else if (name == "norm") {
    const SequenceFile f = sequence();
    text = cmd_norm(resolve(o, &f, max_n), f.values);
  } else if (name == "basis") {
    text = cmd_basis(resolve(o, nullptr, max_n), parse_count(*o.k, "--k"));
  } else if (name == "verify") {
    if (o.suite.empty()) {
      throw UsageError("verify needs a suite");
    }
    std::optional<SequenceFile> f;
    if (o.input) {
      f = sequence();
    }
    const Config c = resolve(o, f ? &*f : nullptr, max_n);
    std::optional<std::vector<double>> values;
    if (f) {
      values = f->values;
    }
    const VerifyOutcome v = cmd_verify(c, o.suite, o.report_star, values);
    text = v.text;
    return v.passed ? kExitOk : kExitViolation;
  } else if (name == "dual") {
    if (o.which.empty()) {
      throw UsageError("dual needs one of alpha, beta, gamma");
    }
    const SequenceFile f = sequence();
    text = cmd_dual(resolve(o, &f, max_n), o.which, f.values);
  }
  return kExitOk;
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (!o.output) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(*o.output, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) {
    throw UsageError("cannot write output '" + *o.output + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::size_t max_n) {
  CLI::App app{"Fractional Pascal difference operator: truncations, transforms, "
               "norms, verification suites and dual diagnostics.",
               "frakpascal"};
  app.require_subcommand(1);
  Options o;

  auto* matrix = app.add_subcommand("matrix", "Emit an N x N truncation");
  add_common(matrix, o);
  matrix->add_option("--which", o.which, "Operator")
      ->required()
      ->check(CLI::IsMember(
          {"phat", "phat-inv", "pascal", "pascal-inv", "delta", "delta-inv"}));

  auto* transform = app.add_subcommand("transform", "Apply P_hat or its inverse");
  add_common(transform, o);
  transform->add_option("--direction", o.direction, "forward or inverse")
      ->check(CLI::IsMember({"forward", "inverse"}));

  auto* norm = app.add_subcommand("norm", "Truncated l_p(P_hat) norm");
  add_common(norm, o);

  auto* basis = app.add_subcommand("basis", "Schauder basis vector b^(k)");
  add_common(basis, o);
  basis->add_option("--k", o.k, "Basis index")->required();

  const auto suites = CLI::IsMember({"identity", "roundtrip", "parallelogram",
                                     "schauder", "inclusion", "absoluteness"});
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, o);
  verify->add_option("suite,--suite", o.suite, "Suite name")->check(suites);
  verify->add_flag("--report-star", o.report_star,
                   "identity: list the starred small entries and their residual");

  const auto duals = CLI::IsMember({"alpha", "beta", "gamma"});
  auto* dual = app.add_subcommand("dual", "Dual-space condition statistics");
  add_common(dual, o);
  dual->add_option("which,--which", o.which, "alpha, beta or gamma")
      ->check(duals);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "frakpascal: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text;
    const int code = dispatch(app, o, text, max_n);
    write_output(o, text, out);
    return code;
  } catch (const NonFiniteInput& e) {
    err << "frakpascal: " << e.what() << "\n";
    return kExitNonFinite;
  } catch (const RangeError& e) {
    err << "frakpascal: " << e.what() << "\n";
    return kExitRange;
  } catch (const std::exception& e) {
    // UsageError, InvalidOrder, PreconditionError, BudgetError and friends.
    err << "frakpascal: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace frakpascal::cli
