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

// Command-line front end for the collective-shift reference-frame library.
//
//   qrf paper-example   re-derive every identity of the built-in worked
//                       example (two-element group, three qubit registers)
//   qrf compare         run the three change-of-frame routes side by side
//                       on one named state, at any (N, registers) geometry
//   qrf fuzz            hammer the cross-module identities with seeded
//                       random states and operators
//   qrf report          re-render a previously saved JSON report
//
// Exit codes: 0 all checks passed (flags tolerated unless --strict),
// 1 at least one check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qrf/qrf.hpp"

namespace {

struct OutputOptions {
  std::string format = "text";
  std::string output;  // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--format", out->format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str()
      ->envname("QRF_FORMAT");
  cmd->add_option("--output", out->output,
                  "Write the report to this file instead of stdout")
      ->envname("QRF_OUTPUT");
}

void add_config_options(CLI::App* cmd, qrf::ScenarioConfig* cfg,
                        bool geometry) {
  if (geometry) {
    cmd->add_option("--group-order", cfg->group_order,
                    "Cyclic group order N (= local register dimension)")
        ->capture_default_str()
        ->envname("QRF_GROUP_ORDER");
    cmd->add_option("--registers", cfg->registers, "Number of registers")
        ->capture_default_str()
        ->envname("QRF_REGISTERS");
  }
  cmd->add_option("--from", cfg->frame_from, "Source frame register")
      ->capture_default_str()
      ->envname("QRF_FROM");
  cmd->add_option("--to", cfg->frame_to, "Target frame register")
      ->capture_default_str()
      ->envname("QRF_TO");
  cmd->add_option("--seed", cfg->seed, "Random seed")
      ->capture_default_str()
      ->envname("QRF_SEED");
  cmd->add_option("--trials", cfg->trials, "Random trials per property")
      ->capture_default_str()
      ->envname("QRF_TRIALS");
  cmd->add_option("--tolerance", cfg->tolerance,
                  "Largest residual a check may pass with")
      ->capture_default_str()
      ->envname("QRF_TOLERANCE");
  auto* strict = cmd->add_flag("--strict", cfg->strict,
                               "Treat flagged checks as failures")
                     ->envname("QRF_STRICT");
  cmd->add_flag(
         "--allow-flagged",
         [cfg](std::int64_t) { cfg->strict = false; },
         "Tolerate flagged checks (default)")
      ->excludes(strict);
  cmd->add_flag("--ascii", cfg->ascii,
                "Render kets and arrows in plain ASCII")
      ->envname("QRF_ASCII");
}

int emit(const qrf::VerificationReport& report, const OutputOptions& out) {
  if (out.output.empty()) {
    qrf::emit_report(report, out.format, std::cout);
  } else {
    qrf::emit_report_to_path(report, out.format, out.output);
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cross-validated changes of quantum reference frame on cyclic groups"};
  app.require_subcommand(1);

  qrf::ScenarioConfig cfg;
  OutputOptions out;

  CLI::App* paper = app.add_subcommand(
      "paper-example",
      "Re-derive every identity of the built-in worked example");
  add_config_options(paper, &cfg, /*geometry=*/false);
  paper
      ->add_option("--approach", cfg.approach,
                   "Focus on one framework's checks")
      ->check(CLI::IsMember({"all", "pn", "ep", "op"}))
      ->capture_default_str()
      ->envname("QRF_APPROACH");
  paper
      ->add_option("--state", cfg.state,
                   "Focus on checks involving one benchmark state")
      ->check(CLI::IsMember({"all", "psi0", "psi1"}))
      ->capture_default_str()
      ->envname("QRF_STATE");
  add_output_options(paper, &out);

  CLI::App* compare = app.add_subcommand(
      "compare", "Run the three change-of-frame routes on one state");
  add_config_options(compare, &cfg, /*geometry=*/true);
  compare
      ->add_option("--state", cfg.state,
                   "Input state (psi0 and psi1 need the default geometry)")
      ->check(CLI::IsMember({"all", "psi0", "psi1", "mix", "twirled-origin",
                             "sector0", "random"}))
      ->capture_default_str()
      ->envname("QRF_STATE");
  add_output_options(compare, &out);

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "Check every cross-module identity on random inputs");
  add_config_options(fuzz, &cfg, /*geometry=*/true);
  add_output_options(fuzz, &out);

  CLI::App* rerender =
      app.add_subcommand("report", "Re-render a saved JSON report");
  std::string input;
  rerender->add_option("input", input, "Path to a JSON report")->required();
  add_output_options(rerender, &out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (paper->parsed()) {
      return emit(qrf::run_paper_example(cfg), out);
    }
    if (compare->parsed()) {
      return emit(qrf::run_comparison(cfg), out);
    }
    if (fuzz->parsed()) {
      return emit(qrf::run_fuzz(cfg), out);
    }
    // report
    std::ifstream file(input, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open '" + input + "' for reading");
    }
    const qrf::VerificationReport saved =
        qrf::report_from_json(qrf::json::parse(file));
    return emit(saved, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
