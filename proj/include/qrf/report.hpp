// Copyright 2026 The qrf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "qrf/linalg.hpp"
#include "qrf/render.hpp"

namespace qrf {

using json = nlohmann::json;

/// Everything a verification run depends on.  Echoed verbatim into the
/// report so a result can be reproduced from the report alone.
struct ScenarioConfig {
  int group_order = 2;
  int registers = 3;
  int frame_from = 0;
  int frame_to = 1;
  std::uint64_t seed = 42;
  int trials = 200;
  double tolerance = 1e-10;
  bool strict = false;
  bool ascii = false;
  int dimension_cap = 4096;
  // Focus selectors.  `approach` restricts the worked-example run to one
  // framework; `state` restricts it to checks involving one global state
  // (and, for comparisons, names the input state).  Both are part of the
  // config so that equal configs always yield byte-identical reports.
  std::string approach = "all";
  std::string state = "all";

  void validate() const {
    if (group_order < 2) {
      throw std::invalid_argument("config: group order must be >= 2");
    }
    if (registers < 2) {
      throw std::invalid_argument("config: need at least two registers");
    }
    double dim = 1.0;
    for (int i = 0; i < registers; ++i) dim *= group_order;
    if (dim > static_cast<double>(dimension_cap)) {
      throw std::invalid_argument(
          "config: total dimension " + render::number(dim) +
          " exceeds the cap of " + std::to_string(dimension_cap));
    }
    if (frame_from < 0 || frame_from >= registers || frame_to < 0 ||
        frame_to >= registers) {
      throw std::invalid_argument("config: frame index outside the registers");
    }
    if (frame_from == frame_to) {
      throw std::invalid_argument("config: the two frames must differ");
    }
    if (trials < 0) {
      throw std::invalid_argument("config: negative trial count");
    }
    if (!(tolerance > 0.0)) {
      throw std::invalid_argument("config: tolerance must be positive");
    }
    if (approach != "all" && approach != "pn" && approach != "ep" &&
        approach != "op") {
      throw std::invalid_argument(
          "config: approach must be one of all, pn, ep, op");
    }
  }

  bool is_default_example() const { return group_order == 2 && registers == 3; }

  RegisterLayout layout() const {
    return RegisterLayout::uniform(registers, group_order);
  }
};

enum class CheckStatus { pass, fail, flagged };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::flagged:
      return "flagged";
  }
  return "fail";
}

inline CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "flagged") return CheckStatus::flagged;
  throw std::invalid_argument("report: unknown check status '" + s + "'");
}

/// One verified identity.  `anchor` names the identity family the check
/// belongs to ("zerowrtA", "yenstar", ...) or "plumbing" for infrastructure
/// checks; every id carries exactly one anchor.
struct CheckResult {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  json witness = json::object();
};

/// A value for which two readings circulate: the independently computed one
/// and a printed variant that disagrees with it.  Recorded, never silently
/// resolved; --strict treats the flag as a failure.
struct Discrepancy {
  std::string id;
  std::string note;
  json computed;
  json variant;
};

struct VerificationReport {
  ScenarioConfig config;
  std::vector<CheckResult> checks;
  std::vector<Discrepancy> discrepancies;

  void add(CheckResult check) { checks.push_back(std::move(check)); }

  /// Pass/fail a measured residual against a threshold.
  void add_residual_check(const std::string& id, const std::string& anchor,
                          double residual, double threshold,
                          json witness = json::object()) {
    witness["threshold"] = threshold;
    checks.push_back(CheckResult{
        id, anchor,
        residual <= threshold ? CheckStatus::pass : CheckStatus::fail,
        residual, std::move(witness)});
  }

  int count(CheckStatus s) const {
    return static_cast<int>(std::count_if(
        checks.begin(), checks.end(),
        [s](const CheckResult& c) { return c.status == s; }));
  }

  /// Exit-code policy: failures always count; flags only under --strict.
  bool ok() const {
    if (count(CheckStatus::fail) > 0) return false;
    if (config.strict && count(CheckStatus::flagged) > 0) return false;
    return true;
  }

  void sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                       return a.id < b.id;
                     });
  }
};

// ---------------------------------------------------------------------------
// Witness helpers
// ---------------------------------------------------------------------------

/// Amplitudes as [re, im] pairs.
inline json amplitudes_json(const StateVector& v) {
  json arr = json::array();
  for (int i = 0; i < v.dim(); ++i) {
    arr.push_back(json::array({v.amp(i).real(), v.amp(i).imag()}));
  }
  return arr;
}

inline json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json state_witness(const StateVector& v, bool ascii) {
  return json{{"rendered", render_ket(v, ascii)},
              {"amplitudes", amplitudes_json(v)}};
}

inline json density_witness(const DensityOperator& rho, bool ascii) {
  return json{{"rendered", render_density(rho, ascii)},
              {"matrix", matrix_json(rho.matrix())}};
}

// ---------------------------------------------------------------------------
// JSON serialization (schema: {config, checks[], summary, discrepancies[]})
// ---------------------------------------------------------------------------

inline json to_json(const ScenarioConfig& c) {
  return json{{"group_order", c.group_order},
              {"registers", c.registers},
              {"from", c.frame_from},
              {"to", c.frame_to},
              {"seed", c.seed},
              {"trials", c.trials},
              {"tolerance", c.tolerance},
              {"strict", c.strict},
              {"ascii", c.ascii},
              {"dimension_cap", c.dimension_cap},
              {"approach", c.approach},
              {"state", c.state}};
}

inline ScenarioConfig config_from_json(const json& j) {
  ScenarioConfig c;
  c.group_order = j.at("group_order").get<int>();
  c.registers = j.at("registers").get<int>();
  c.frame_from = j.at("from").get<int>();
  c.frame_to = j.at("to").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trials = j.at("trials").get<int>();
  c.tolerance = j.at("tolerance").get<double>();
  c.strict = j.at("strict").get<bool>();
  c.ascii = j.at("ascii").get<bool>();
  c.dimension_cap = j.at("dimension_cap").get<int>();
  c.approach = j.at("approach").get<std::string>();
  c.state = j.at("state").get<std::string>();
  return c;
}

inline json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back(json{{"id", c.id},
                          {"anchor", c.anchor},
                          {"status", to_string(c.status)},
                          {"residual", c.residual},
                          {"witness", c.witness}});
  }
  json discrepancies = json::array();
  for (const Discrepancy& d : report.discrepancies) {
    discrepancies.push_back(json{{"id", d.id},
                                 {"note", d.note},
                                 {"computed", d.computed},
                                 {"variant", d.variant}});
  }
  return json{{"config", to_json(report.config)},
              {"checks", std::move(checks)},
              {"summary",
               json{{"pass", report.count(CheckStatus::pass)},
                    {"fail", report.count(CheckStatus::fail)},
                    {"flagged", report.count(CheckStatus::flagged)}}},
              {"discrepancies", std::move(discrepancies)}};
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport report;
  report.config = config_from_json(j.at("config"));
  for (const json& c : j.at("checks")) {
    report.checks.push_back(
        CheckResult{c.at("id").get<std::string>(),
                    c.at("anchor").get<std::string>(),
                    check_status_from_string(c.at("status").get<std::string>()),
                    c.at("residual").get<double>(), c.at("witness")});
  }
  for (const json& d : j.at("discrepancies")) {
    report.discrepancies.push_back(
        Discrepancy{d.at("id").get<std::string>(),
                    d.at("note").get<std::string>(), d.at("computed"),
                    d.at("variant")});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

namespace render {

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string residual_string(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

/// Witness fields that read well on a terminal (strings and small scalars;
/// bulk numeric payloads stay JSON-only).
inline void witness_lines(const json& witness, const std::string& indent,
                          std::string& out) {
  if (!witness.is_object()) return;
  for (const auto& [key, value] : witness.items()) {
    if (key == "amplitudes" || key == "matrix" || key == "threshold") continue;
    if (value.is_string()) {
      out += indent + key + ": " + value.get<std::string>() + "\n";
    } else if (value.is_number() || value.is_boolean()) {
      out += indent + key + ": " + value.dump() + "\n";
    } else if (value.is_array() && !value.empty() && value[0].is_array() &&
               !value[0].empty() && value[0][0].is_string()) {
      // A table: array of rows of strings; align the columns.
      std::vector<std::size_t> widths;
      for (const json& row : value) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (widths.size() <= i) widths.push_back(0);
          widths[i] = std::max(widths[i], row[i].get<std::string>().size());
        }
      }
      for (const json& row : value) {
        out += indent + "  ";
        for (std::size_t i = 0; i < row.size(); ++i) {
          out += pad(row[i].get<std::string>(), widths[i] + 2);
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
      }
    } else if (value.is_object()) {
      out += indent + key + ":\n";
      witness_lines(value, indent + "  ", out);
    }
  }
}

}  // namespace render

inline std::string render_text(const VerificationReport& report) {
  const ScenarioConfig& c = report.config;
  std::string out;
  out += "collective-shift reference frame report\n";
  out += "config: N=" + std::to_string(c.group_order) +
         " registers=" + std::to_string(c.registers) + " frames " +
         register_name(c.frame_from) + (c.ascii ? " -> " : " → ") +
         register_name(c.frame_to) + " seed=" + std::to_string(c.seed) +
         " trials=" + std::to_string(c.trials) +
         " tolerance=" + render::number(c.tolerance) +
         (c.strict ? " strict" : "") +
         (c.approach != "all" ? " approach=" + c.approach : "") +
         (c.state != "all" ? " state=" + c.state : "") + "\n\n";

  std::size_t id_width = 4;
  for (const CheckResult& check : report.checks) {
    id_width = std::max(id_width, check.id.size());
  }
  for (const CheckResult& check : report.checks) {
    std::string status = to_string(check.status);
    for (char& ch : status) ch = static_cast<char>(std::toupper(ch));
    out += render::pad(status, 8) + render::pad(check.id, id_width + 2) +
           render::pad("[" + check.anchor + "]", 22) +
           "residual " + render::residual_string(check.residual) + "\n";
    render::witness_lines(check.witness, std::string(8, ' '), out);
  }

  out += "\nsummary: pass=" + std::to_string(report.count(CheckStatus::pass)) +
         " fail=" + std::to_string(report.count(CheckStatus::fail)) +
         " flagged=" + std::to_string(report.count(CheckStatus::flagged)) +
         "\n";

  if (!report.discrepancies.empty()) {
    out += "\nrecorded discrepancies (flagged, not failed";
    out += c.strict ? "; strict mode escalates them):\n" : "):\n";
    for (const Discrepancy& d : report.discrepancies) {
      out += "  " + d.id + "\n";
      out += "    note:     " + d.note + "\n";
      const auto one_line = [](const json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
      };
      out += "    computed: " + one_line(d.computed) + "\n";
      out += "    variant:  " + one_line(d.variant) + "\n";
    }
  }
  return out;
}

/// Write the report to a stream in the requested format.
inline void emit_report(const VerificationReport& report,
                        const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << to_json(report).dump(2) << "\n";
  } else if (format == "text") {
    os << render_text(report);
  } else {
    throw std::invalid_argument("emit_report: unknown format '" + format +
                                "' (expected text or json)");
  }
  if (!os) {
    throw std::runtime_error("emit_report: stream write failed");
  }
}

inline void emit_report_to_path(const VerificationReport& report,
                                const std::string& format,
                                const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("emit_report: cannot open '" + path +
                             "' for writing");
  }
  emit_report(report, format, file);
}

}  // namespace qrf
