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

#include <string>

#include "reesdet/bounds/bounds.hpp"
#include "reesdet/cli/problem_file.hpp"
#include "reesdet/cli/report.hpp"
#include "reesdet/gs/gs.hpp"
#include "reesdet/matrix/determinant.hpp"
#include "reesdet/sources.hpp"

namespace reesdet::cli {

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// "I_2" for minors, "Pf_4" for Pfaffians of half-size 2.
inline std::string ideal_name(MatrixKind kind, std::int64_t j) {
  if (kind == MatrixKind::alternating) return "Pf_" + std::to_string(2 * j);
  return "I_" + std::to_string(j);
}

inline std::string_view gs_generic_source(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::ordinary: return sources::gs_generic_ordinary;
    case MatrixKind::symmetric: return sources::gs_generic_symmetric;
    case MatrixKind::alternating: return sources::gs_generic_alternating;
  }
  return {};
}

template <poly::CoefficientField F>
ProblemInstance shape(const matrix::PolyMatrix<F>& a, std::int64_t t) {
  return ProblemInstance{a.kind(), static_cast<std::int64_t>(std::min(a.rows(), a.cols())),
                         static_cast<std::int64_t>(std::max(a.rows(), a.cols())), t};
}

inline void add_hypotheses(ReportSection& s, const bounds::HypothesisReport& h, MatrixKind kind,
                           const std::string& prefix) {
  for (const auto& e : h.per_j) {
    const auto name = ideal_name(kind, e.j);
    s.add(prefix + "ht " + name, e.actual.to_string(), sources::groebner);
    s.add(prefix + "min required ht " + name, std::to_string(e.required), h.source);
  }
  s.add(prefix + "hypotheses hold", yes_no(h.all_satisfied), h.source);
}

}  // namespace detail

template <poly::CoefficientField F>
[[nodiscard]] ReportSection height_section(const matrix::PolyMatrix<F>& a, std::int64_t t,
                                           const Deadline& deadline) {
  ReportSection s{"height", {}};
  const auto gh = groebner::is_generic_height(a, t, deadline);
  s.add("ht " + detail::ideal_name(a.kind(), t), gh.actual.to_string(), sources::groebner);
  s.add("generic value", std::to_string(gh.expected), sources::generic_height);
  s.add("generic height", detail::yes_no(gh.generic), sources::generic_height);
  s.add("minimal generators if generic", std::to_string(gs::min_gens_generic(detail::shape(a, t))),
        sources::min_gens);
  return s;
}

template <poly::CoefficientField F>
[[nodiscard]] ReportSection gs_section(const matrix::PolyMatrix<F>& a, std::int64_t t, ExtendedNat s_value,
                                       const Deadline& deadline) {
  ReportSection s{"gs", {}};
  const auto r = gs::check_Gs(a, t, s_value, deadline);
  for (const auto& e : r.per_j) {
    const auto name = detail::ideal_name(a.kind(), e.j);
    s.add("ht " + name, e.actual.to_string(), sources::groebner);
    s.add("threshold for " + name, std::to_string(e.threshold), sources::gs_conditions);
    s.add("min required ht " + name, e.required.to_string(), sources::gs_conditions);
  }
  s.add("G_s with s = " + s_value.to_string(), detail::yes_no(r.satisfied), sources::gs_conditions);
  s.add("max s", r.max_s.to_string(), sources::gs_max_derivation);
  s.add("max s for the generic matrix", gs::max_Gs_generic(detail::shape(a, t)).to_string(),
        detail::gs_generic_source(a.kind()));
  return s;
}

template <poly::CoefficientField F>
[[nodiscard]] ReportSection specialize_section(const matrix::PolyMatrix<F>& a, std::int64_t t,
                                               const Deadline& deadline) {
  ReportSection s{"specialize", {}};
  const auto r = bounds::specialization_check(a, t, deadline);
  detail::add_hypotheses(s, r.hypotheses, a.kind(), "");
  s.add("specializes", detail::yes_no(r.specializes), r.source);
  if (r.specializes) s.add("Cohen-Macaulay", bounds::to_string(r.cohen_macaulay), r.source);
  return s;
}

/// Verifies the capped height hypotheses, then tabulates the bounds.
template <poly::CoefficientField F>
[[nodiscard]] ReportSection bounds_section(const matrix::PolyMatrix<F>& a, std::int64_t t, KRange k,
                                           const Deadline& deadline) {
  ReportSection s{"bounds", {}};
  const auto inst = instance_of(a, t);
  if (!bounds::dispatch(inst)) throw PreconditionError("no degree bound covers " + inst.describe());
  const auto h = bounds::hypothesis_check(a, t, bounds::HypothesisMode::bounds, deadline);
  for (const auto& e : h.per_j)
    if (!e.satisfied)
      throw PreconditionError("height hypothesis fails: ht " + detail::ideal_name(a.kind(), e.j) + " = " +
                              e.actual.to_string() + " < " + std::to_string(e.required) + " (" + h.source +
                              ")");
  detail::add_hypotheses(s, h, a.kind(), "");
  s.add("d", std::to_string(inst.d), sources::input);
  s.add("delta", std::to_string(inst.delta), sources::input);
  for (std::int64_t k_ = k.lo; k_ <= k.hi; ++k_) {
    const auto b = bounds::degree_bounds(inst, k_, true);
    const auto tag = "A_" + std::to_string(k_);
    if (!b.applicable) {
      s.add(tag, "not covered: " + b.note, b.source);
      continue;
    }
    s.add("b0(" + tag + ") at most", b.b0.to_string(), b.source);
    s.add("td(" + tag + ") at most", b.td.to_string(), b.source);
  }
  return s;
}

template <poly::CoefficientField F>
[[nodiscard]] ReportSection classify_section(const matrix::PolyMatrix<F>& a, std::int64_t t,
                                             const Deadline& deadline) {
  ReportSection s{"classify", {}};
  const auto r = bounds::classify(a, t, deadline);
  if (r.specialization) detail::add_hypotheses(s, *r.specialization, a.kind(), "specialization: ");
  if (r.bounds) detail::add_hypotheses(s, *r.bounds, a.kind(), "bounds: ");
  for (const auto& c : r.conclusions) {
    std::string value = c.up_to_k ? "A_k = 0 for k <= " + std::to_string(*c.up_to_k) : "holds";
    value += "; hypotheses_verified=" + std::string(c.hypotheses_verified ? "true" : "false");
    s.add(bounds::to_string(c.claim), value, c.source);
  }
  if (r.conclusions.empty()) s.add("conclusions", "none", sources::groebner);
  return s;
}

template <poly::CoefficientField F>
[[nodiscard]] ReportSection pfaffian_section(const matrix::PolyMatrix<F>& a, std::int64_t t) {
  if (a.kind() != MatrixKind::alternating) throw InputError("pfaffian needs an alternating matrix");
  ReportSection s{"pfaffian", {}};
  if (a.rows() % 2 == 0) {
    const auto pf = matrix::pfaffian(a);
    s.add("Pf", poly::to_string(pf), sources::expansion);
    s.add("Pf^2 = det", detail::yes_no(pf * pf == matrix::determinant(a)), sources::expansion);
  } else {
    s.add("Pf", "0 (odd size)", sources::expansion);
  }
  const auto gens = matrix::enumerate_pfaffians(a, static_cast<std::size_t>(2 * t));
  s.add("number of " + std::to_string(2 * t) + "-Pfaffians", std::to_string(gens.size()), sources::expansion);
  return s;
}

}  // namespace reesdet::cli
