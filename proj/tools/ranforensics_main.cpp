// Copyright 2026 The ranforensics Authors
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

// ranforensics command-line entry point.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "ranforensics/advisor.hpp"
#include "ranforensics/diagnose.hpp"
#include "ranforensics/error.hpp"
#include "ranforensics/fit.hpp"
#include "ranforensics/ingest.hpp"
#include "ranforensics/report.hpp"
#include "ranforensics/synth.hpp"
#include "ranforensics/text.hpp"

namespace fs = std::filesystem;
namespace rf = ranforensics;
using nlohmann::json;

namespace {

void emit_error(const std::string& module, const std::string& message) {
  const json err = {{"error", {{"module", module}, {"message", message}}}};
  std::cerr << err.dump() << std::endl;
}

void add_threshold_flags(CLI::App* cmd, rf::ThresholdConfig& t) {
  cmd->add_option("--fairness-floor", t.fairness_floor, "Jain index below which fairness is violated")
      ->capture_default_str();
  cmd->add_option("--util-trend-tol", t.util_trend_tolerance, "relative utilization change treated as flat")
      ->capture_default_str();
  cmd->add_option("--rtf-ceiling", t.rtf_dilation_ceiling, "RTF below this counts as dilation")
      ->capture_default_str();
  cmd->add_option("--saturation", t.budget_saturation_fraction, "fraction of the core budget that saturates")
      ->capture_default_str();
  cmd->add_option("--stall-window", t.stall_window_s, "telemetry silence (s) that counts as a stall")
      ->capture_default_str();
  cmd->add_option("--tcum-band", t.t_cum_stability_band, "band within which t_cum counts as stable")
      ->capture_default_str();
}

void print_diagnosis(const rf::Diagnosis& d) {
  std::cout << fmt::format("{}: {}\n", rf::to_string(d.stack_id), rf::to_string(d.verdict));
  for (const auto& e : d.evidence) std::cout << fmt::format("  - {}: {}\n", rf::to_string(e.kind), e.detail);
  for (const auto& n : d.data_quality_notes) std::cout << fmt::format("  note: {}\n", n);
}

json diagnosis_json(const rf::Diagnosis& d) {
  json ev = json::array();
  for (const auto& e : d.evidence) ev.push_back({{"kind", rf::to_string(e.kind)}, {"detail", e.detail}});
  return {{"stack_id", rf::to_string(d.stack_id)},
          {"verdict", rf::to_string(d.verdict)},
          {"evidence", ev},
          {"data_quality_notes", d.data_quality_notes}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ranforensics: KPI forensics for CU/DU load studies"};
  app.require_subcommand(1, 1);

  // analyze
  std::string study_path, out_dir;
  rf::AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "ingest a study manifest and write report files");
  analyze->add_option("--study", study_path, "study manifest")->required();
  analyze->add_option("--out", out_dir, "output directory")->required();
  analyze->add_option("--head-trim", analyze_opts.head_trim_s, "seconds dropped at run start")->capture_default_str();
  analyze->add_option("--tail-trim", analyze_opts.tail_trim_s, "seconds dropped at run end")->capture_default_str();
  analyze->add_option("--threads", analyze_opts.max_threads, "worker threads (0 = auto)")->capture_default_str();
  add_threshold_flags(analyze, analyze_opts.thresholds);

  // fit
  std::string points_spec, points_file;
  bool fit_json = false;
  auto* fit = app.add_subcommand("fit", "fit T(N) = a N^b in log space");
  auto* points_opt = fit->add_option("--points", points_spec, "n:t pairs, e.g. 1:114.59,3:65.21");
  fit->add_option("--points-file", points_file, "file of n:t pairs (comma or newline separated)")
      ->excludes(points_opt);
  fit->add_flag("--json", fit_json, "full-precision JSON output");

  // diagnose
  std::string diag_report;
  rf::ThresholdConfig diag_thresholds;
  bool diag_json = false;
  auto* diagnose = app.add_subcommand("diagnose", "classify stacks from a prior report.json");
  diagnose->add_option("--report", diag_report, "report.json written by analyze")->required();
  diagnose->add_flag("--json", diag_json, "JSON output");
  add_threshold_flags(diagnose, diag_thresholds);

  // advise
  std::vector<std::string> requirements;
  std::string matrix_file;
  bool advise_json = false;
  auto* advise = app.add_subcommand("advise", "platforms meeting capability requirements");
  advise->add_option("--require", requirements, "property=native|augmented|unsupported (repeatable)")->required();
  advise->add_option("--matrix", matrix_file, "capability matrix CSV (default: built-in)");
  advise->add_flag("--json", advise_json, "JSON output");

  // progression
  std::string claim;
  auto* prog = app.add_subcommand("progression", "staged validation plan for a claim class");
  prog->add_option("--claim", claim, "claim class, e.g. fronthaul-timing")->required();

  // synth
  std::string scenario_file, synth_out;
  auto* synth = app.add_subcommand("synth", "generate run artifacts from a scenario");
  synth->add_option("--scenario", scenario_file, "scenario JSON")->required();
  synth->add_option("--out", synth_out, "output directory")->required();

  // report
  std::string report_input, report_format = "text", report_out;
  auto* report = app.add_subcommand("report", "re-render a report.json");
  report->add_option("--input", report_input, "report.json written by analyze")->required();
  report->add_option("--format", report_format, "text, json or csv-plot")->capture_default_str();
  report->add_option("--out", report_out, "write files here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("cli", e.what());
    return 2;
  }

  try {
    if (*analyze) {
      const auto rep = rf::analyze_study(study_path, analyze_opts);
      for (const auto& p : rf::write_report_files(rep, out_dir)) std::cout << p.string() << "\n";
      for (const auto& s : rep.stacks) {
        std::cout << fmt::format("{}: {}\n", rf::to_string(s.stack_id), rf::to_string(s.diagnosis.verdict));
      }
    } else if (*fit) {
      std::string spec = points_spec;
      if (!points_file.empty()) {
        spec.clear();
        for (const auto& line : rf::text::read_lines(rf::read_file(points_file))) {
          const auto t = rf::text::trim(line);
          if (t.empty() || t.front() == '#') continue;
          if (!spec.empty()) spec += ",";
          spec += std::string(t);
        }
      }
      if (spec.empty()) throw rf::FitError("no points given (use --points or --points-file)");
      const auto points = rf::parse_points(spec);
      const auto f = rf::fit_power_law(points);
      if (fit_json) {
        std::cout << json{{"a", f.a}, {"b", f.b}, {"r2_log", f.r2_log}}.dump() << "\n";
      } else {
        std::cout << fmt::format("a={:.2f} b={:.4f} r2_log={:.4f}\n", f.a, f.b, f.r2_log);
      }
    } else if (*diagnose) {
      const auto rep = rf::parse_report_json(rf::read_file(diag_report));
      json all = json::array();
      for (const auto& s : rep.stacks) {
        rf::Diagnosis d;
        try {
          d = rf::classify(s.rows, diag_thresholds);
        } catch (const rf::DiagnoseError& e) {
          d.stack_id = s.stack_id;
          d.data_quality_notes.push_back(fmt::format("not classified: {}", e.detail()));
        }
        if (diag_json) {
          all.push_back(diagnosis_json(d));
        } else {
          print_diagnosis(d);
        }
      }
      if (diag_json) std::cout << all.dump(2) << "\n";
    } else if (*advise) {
      const rf::CapabilityMatrix matrix =
          matrix_file.empty() ? rf::load_matrix() : rf::import_matrix_csv(rf::read_file(matrix_file));
      rf::RequirementQuery q;
      for (const auto& r : requirements) q.requirements.push_back(rf::parse_requirement(r));
      const auto ranked = rf::query(matrix, q);
      if (advise_json) {
        json out = json::array();
        for (const auto& p : ranked) {
          out.push_back({{"platform", p.name},
                         {"native_among_required", p.native_among_required},
                         {"native_overall", p.native_overall}});
        }
        std::cout << json{{"matrix_version", matrix.version()}, {"platforms", out}}.dump(2) << "\n";
      } else {
        std::cout << fmt::format("matrix {}; {} platform(s)\n", matrix.version(), ranked.size());
        for (const auto& p : ranked) {
          std::cout << fmt::format("{}  (native: {} required, {} overall)\n", p.name, p.native_among_required,
                                   p.native_overall);
        }
        std::cout << "ranking by native counts then name is a toolkit convention\n";
      }
    } else if (*prog) {
      const auto plan = rf::progression(rf::parse_claim_class(claim));
      std::cout << fmt::format("{}\n", rf::to_string(plan.claim_class));
      for (std::size_t i = 0; i < plan.stages.size(); ++i) {
        const auto& st = plan.stages[i];
        std::string platforms;
        for (const auto& p : st.platforms) platforms += (platforms.empty() ? "" : ", ") + p;
        std::cout << fmt::format("{}. {} [{}]\n   {}\n", i + 1, st.environment, platforms, st.rationale);
      }
    } else if (*synth) {
      const auto truths = rf::parse_scenario(rf::read_file(scenario_file));
      std::cout << rf::generate_study(truths, synth_out).string() << "\n";
    } else if (*report) {
      const auto format = rf::parse_report_format(report_format);
      const auto rep = rf::parse_report_json(rf::read_file(report_input));
      const auto docs = rf::render_report(rep, format);
      if (report_out.empty()) {
        for (const auto& d : docs) {
          if (docs.size() > 1) std::cout << "# " << d.filename << "\n";
          std::cout << d.content;
        }
      } else {
        fs::create_directories(report_out);
        for (const auto& d : docs) {
          const auto path = fs::path(report_out) / d.filename;
          std::FILE* f = std::fopen(path.string().c_str(), "wb");
          if (!f) throw rf::ReportError(fmt::format("cannot write {}", path.string()));
          std::fwrite(d.content.data(), 1, d.content.size(), f);
          std::fclose(f);
          std::cout << path.string() << "\n";
        }
      }
    }
  } catch (const rf::Error& e) {
    emit_error(e.module(), e.detail());
    return 1;
  } catch (const std::exception& e) {
    emit_error("cli", e.what());
    return 1;
  }
  return 0;
}
