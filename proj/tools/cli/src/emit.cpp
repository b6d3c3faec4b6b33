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

#include "emit.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "frakpascal/format.hpp"

namespace frakpascal::cli {

namespace {

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string_view status_text(Check::Status s) {
  switch (s) {
    case Check::Status::kPass:
      return "pass";
    case Check::Status::kFail:
      return "fail";
    case Check::Status::kInfo:
      return "info";
  }
  return "info";
}

}  // namespace

Json json_number(double v) {
  if (std::isfinite(v)) {
    return v;
  }
  return format_shortest(v);
}

Json json_exponent(const PExponent& p) {
  return p.is_infinite() ? Json("inf") : Json(p.p());
}

std::string text_exponent(const PExponent& p) {
  return p.is_infinite() ? "inf" : format_shortest(p.p());
}

std::string render_matrix(const DenseTriangle& m, Format f, Json header) {
  if (f == Format::kJson) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
      Json row = Json::array();
      for (double v : m.row(r)) {
        row.push_back(json_number(v));
      }
      rows.push_back(std::move(row));
    }
    header["rows"] = std::move(rows);
    return dump(header);
  }
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto row = m.row(r);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) {
        out += ',';
      }
      out += format_shortest(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string render_matrix(const exact::ExactTriangle& m, Format f,
                          Json header) {
  if (f == Format::kJson) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
      Json row = Json::array();
      for (const auto& v : m.row(r)) {
        row.push_back(exact::to_int64(v));
      }
      rows.push_back(std::move(row));
    }
    header["rows"] = std::move(rows);
    return dump(header);
  }
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto row = m.row(r);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) {
        out += ',';
      }
      out += std::to_string(exact::to_int64(row[k]));
    }
    out += '\n';
  }
  return out;
}

std::string render_sequence(std::span<const double> values, Format f,
                            Json header) {
  if (f == Format::kJson) {
    Json list = Json::array();
    for (double v : values) {
      list.push_back(json_number(v));
    }
    header["values"] = std::move(list);
    return dump(header);
  }
  std::string out;
  for (double v : values) {
    out += format_shortest(v);
    out += '\n';
  }
  return out;
}

std::string render_record(const std::vector<std::string>& keys,
                          const std::vector<Json>& values, Format f,
                          Json header) {
  if (f == Format::kJson) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      header[keys[i]] = values[i];
    }
    return dump(header);
  }
  std::string names, fields;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i > 0) {
      names += ',';
      fields += ',';
    }
    names += keys[i];
    const Json& v = values[i];
    if (v.is_number_float()) {
      fields += format_shortest(v.get<double>());
    } else if (v.is_string()) {
      fields += v.get<std::string>();
    } else {
      fields += v.dump();
    }
  }
  return names + "\n" + fields + "\n";
}

Check make_check(std::string name, double value, std::string relation,
                 double bound) {
  bool ok = false;
  if (relation == "<=") {
    ok = value <= bound;
  } else if (relation == ">=") {
    ok = value >= bound;
  } else if (relation == ">") {
    ok = value > bound;
  } else if (relation == "==") {
    ok = value == bound;
  }
  // nan compares false everywhere, so it always fails.
  return {std::move(name), value, std::move(relation), bound,
          ok ? Check::Status::kPass : Check::Status::kFail};
}

Check make_info(std::string name, double value) {
  return {std::move(name), value, "", 0.0, Check::Status::kInfo};
}

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == Check::Status::kFail) {
      return false;
    }
  }
  return true;
}

std::string render_verify(const VerifyReport& r, Format f, Json header) {
  if (f == Format::kJson) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json row;
      row["name"] = c.name;
      row["value"] = json_number(c.value);
      if (c.status != Check::Status::kInfo) {
        row["relation"] = c.relation;
        row["bound"] = json_number(c.bound);
      }
      row["status"] = status_text(c.status);
      checks.push_back(std::move(row));
    }
    header["checks"] = std::move(checks);
    header["passed"] = r.passed();
    return dump(header);
  }
  std::string out = "check,value,relation,bound,status\n";
  for (const auto& c : r.checks) {
    out += c.name + "," + format_shortest(c.value) + "," + c.relation + ",";
    if (c.status != Check::Status::kInfo) {
      out += format_shortest(c.bound);
    }
    out += ",";
    out += status_text(c.status);
    out += "\n";
  }
  return out;
}

std::string render_dual(const std::vector<ConditionReport>& reports,
                        const std::vector<std::string>& sets, Format f,
                        Json header) {
  if (f == Format::kJson) {
    Json list = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      Json entry;
      entry["set"] = sets[i];
      entry["statistic"] = std::string(to_string(r.statistic));
      entry["horizon"] = r.horizon;
      entry["verdict"] = std::string(to_string(r.verdict));
      // The decay set is computed for coverage only.
      entry["informational"] = (sets[i] == "d4");
      Json values = Json::array();
      for (double v : r.values) {
        values.push_back(json_number(v));
      }
      entry["values"] = std::move(values);
      list.push_back(std::move(entry));
    }
    header["reports"] = std::move(list);
    return dump(header);
  }
  std::string out = "set,statistic,horizon,verdict,index,value\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const std::string prefix = sets[i] + "," + std::string(to_string(r.statistic)) +
                               "," + std::to_string(r.horizon) + "," +
                               std::string(to_string(r.verdict)) + ",";
    for (std::size_t j = 0; j < r.values.size(); ++j) {
      out += prefix + std::to_string(j) + "," + format_shortest(r.values[j]) +
             "\n";
    }
  }
  return out;
}

}  // namespace frakpascal::cli
