/*
 * Copyright 2026 The reesdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reesdet/cli/analyses.hpp"
#include "reesdet/cli/problem_file.hpp"
#include "reesdet/cli/report.hpp"

namespace reesdet::cli {

enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_precondition = 2 };

struct Options {
  std::string field;  // empty: take the problem file's field
  std::string order;  // empty: take the problem file's order
  bool json = false;
  double timeout = 0;  // seconds, 0 = none
  ExtendedNat s = ExtendedNat::infinity();
  KRange k{1, 4};
};

[[nodiscard]] inline std::vector<Request> default_pipeline(const Options& o) {
  return {{Analysis::height, {}, {}},
          {Analysis::gs, o.s, {}},
          {Analysis::specialize, {}, {}},
          {Analysis::bounds, {}, o.k},
          {Analysis::classify, {}, {}}};
}

namespace detail {

inline std::string describe_problem(const ProblemFile& pf) {
  std::string s = std::string(matrix::to_string(pf.kind)) + " " + std::to_string(pf.rows()) + "x" +
                  std::to_string(pf.cols());
  s += pf.kind == MatrixKind::alternating ? " 2t=" + std::to_string(2 * pf.t) : " t=" + std::to_string(pf.t);
  return s + " in " + std::to_string(pf.variables.size()) + " variables";
}

template <poly::CoefficientField F>
ReportSection run_one(const matrix::PolyMatrix<F>& a, std::int64_t t, const Request& r, const Options& o,
                      const Deadline& dl) {
  switch (r.analysis) {
    case Analysis::height: return height_section(a, t, dl);
    case Analysis::gs: return gs_section(a, t, r.s.value_or(o.s), dl);
    case Analysis::specialize: return specialize_section(a, t, dl);
    case Analysis::bounds: return bounds_section(a, t, r.k.value_or(o.k), dl);
    case Analysis::classify: return classify_section(a, t, dl);
    case Analysis::pfaffian: return pfaffian_section(a, t);
  }
  return {};
}

}  // namespace detail

/// Runs the requested analyses. With `keep_going`, a failed precondition
/// ends only its own section (the full pipeline); otherwise it ends the run.
/// Returns the exit status; the report holds whatever was computed.
[[nodiscard]] inline int analyze_problem(ProblemFile pf, const std::vector<Request>& requests, const Options& o,
                                         bool keep_going, Report& report) {
  if (!o.field.empty()) pf.field = parse_field_spec(o.field);
  if (!o.order.empty()) pf.order = poly::parse_monomial_order(o.order);
  report.field = pf.field.name();
  report.order = std::string(poly::to_string(pf.order));
  report.problem = detail::describe_problem(pf);
  const Deadline dl = o.timeout > 0 ? Deadline::after(o.timeout) : Deadline{};
  return with_field(pf.field, [&](auto field) {
    const auto a = build_matrix(pf, std::move(field));
    for (const auto& r : requests) {
      try {
        report.sections.push_back(detail::run_one(a, pf.t, r, o, dl));
        const auto* g = report.sections.back().find("generic height");
        if (keep_going && r.analysis == Analysis::height && g && g->value == "no")
          throw PreconditionError("ideal does not have generic height; later analyses need it");
      } catch (const PreconditionError& e) {
        if (!keep_going || r.analysis == Analysis::height) throw;
        ReportSection s{to_string(r.analysis), {}};
        s.add("skipped", e.what(), "precondition");
        report.sections.push_back(std::move(s));
      }
    }
    return static_cast<int>(exit_ok);
  });
}

/// Entry point shared by the executable and the tests.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinantal ideals: heights, G_s, Rees-algebra degree bounds", "reesdet"};
  app.require_subcommand(1);
  Options o;
  std::string s_text = "inf", k_text = "1..4", path, write_path;
  app.add_option("--field", o.field, "QQ | rationals | F_p | p (default: the file's field, else F_32003)");
  app.add_option("--order", o.order, "grevlex | lex");
  app.add_flag("--json", o.json, "structured output");
  app.add_option("--timeout", o.timeout, "seconds before a Groebner run is abandoned (exit 2)")
      ->check(CLI::NonNegativeNumber);

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", path, "problem file")->required();
    c->fallthrough();
    return c;
  };
  auto* analyze = file_cmd("analyze", "run the requested analyses, or the full pipeline");
  analyze->add_option("--k", k_text, "k or a..b for bounds");
  auto* height = file_cmd("height", "height of the ideal and the generic value");
  auto* gs_cmd = file_cmd("gs", "G_s height conditions");
  gs_cmd->add_option("--s", s_text, "positive integer or inf");
  auto* bounds_cmd = file_cmd("bounds", "degree bounds on the Rees relations");
  bounds_cmd->add_option("--k", k_text, "k or a..b");
  auto* specialize = file_cmd("specialize", "specialization hypotheses");
  auto* classify = file_cmd("classify", "linear type, fiber type and related conclusions");
  auto* pfaffian = file_cmd("pfaffian", "Pfaffian of an alternating matrix");

  auto* generic = app.add_subcommand("generic", "build and analyze a generic matrix");
  std::string kind_text = "ordinary", analysis_text = "analyze";
  std::size_t gm = 0, gn = 0;
  std::int64_t gt = 0;
  generic->add_option("--kind", kind_text, "ordinary | symmetric | alternating");
  generic->add_option("--m", gm, "rows (defaults to n)");
  generic->add_option("--n", gn, "columns")->required()->check(CLI::PositiveNumber);
  generic->add_option("--t", gt, "minor size, or Pfaffian half-size")->required();
  generic->add_option("analysis", analysis_text,
                      "analyze | height | gs | specialize | bounds | classify | pfaffian");
  generic->add_option("--s", s_text, "positive integer or inf");
  generic->add_option("--k", k_text, "k or a..b");
  generic->add_option("--write", write_path, "also save the problem file here");
  generic->fallthrough();

  Report report;
  int status = exit_ok;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    o.s = parse_s(s_text);
    o.k = parse_k_range(k_text);

    ProblemFile pf;
    std::vector<Request> requests;
    bool keep_going = false;
    if (generic->parsed()) {
      const auto kind = matrix::parse_matrix_kind(kind_text);
      if (gm == 0) gm = gn;
      pf = generic_problem(kind, gm, gn, gt);
      if (!o.field.empty()) pf.field = parse_field_spec(o.field);
      validate_problem(pf);
      if (analysis_text == "analyze") {
        requests = default_pipeline(o);
        if (kind == MatrixKind::alternating) requests.insert(requests.begin() + 1, {Analysis::pfaffian, {}, {}});
        keep_going = true;
      } else {
        requests = {{parse_analysis(analysis_text), {}, {}}};
      }
      if (!write_path.empty()) {
        std::ofstream f(write_path);
        if (!f) throw InputError("cannot write '" + write_path + "'");
        f << problem_to_json(pf).dump(2) << "\n";
      }
    } else {
      pf = load_problem(path);
      if (analyze->parsed()) {
        requests = pf.requested.empty() ? default_pipeline(o) : pf.requested;
        keep_going = true;
      } else {
        const std::pair<CLI::App*, Analysis> single[] = {
            {height, Analysis::height},         {gs_cmd, Analysis::gs},
            {bounds_cmd, Analysis::bounds},     {specialize, Analysis::specialize},
            {classify, Analysis::classify},     {pfaffian, Analysis::pfaffian}};
        for (const auto& [cmd, an] : single)
          if (cmd->parsed()) requests = {{an, {}, {}}};
      }
    }
    status = analyze_problem(pf, requests, o, keep_going, report);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  } catch (const InputError& e) {
    report.error = e.what();
    status = exit_input;
  } catch (const PreconditionError& e) {
    report.error = std::string("precondition failed: ") + e.what();
    status = exit_precondition;
  } catch (const TimeoutError& e) {
    report.error = "timed out after " + std::to_string(o.timeout) + " s: " + e.what();
    status = exit_precondition;
  }
  if (o.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else if (!report.field.empty()) {
    out << render_text(report);
  }
  if (!report.error.empty()) err << "error: " << report.error << "\n";
  return status;
}

}  // namespace reesdet::cli
