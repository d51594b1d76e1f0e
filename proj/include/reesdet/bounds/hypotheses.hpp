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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reesdet/combinatorics.hpp"
#include "reesdet/deadline.hpp"
#include "reesdet/errors.hpp"
#include "reesdet/groebner/ideal.hpp"
#include "reesdet/instance.hpp"
#include "reesdet/sources.hpp"

namespace reesdet::bounds {

using groebner::ExtendedHeight;

/// specialization: uncapped height requirements for the Rees ring to
/// specialize. bounds: the same requirements capped by d, as needed by the
/// degree bounds.
enum class HypothesisMode { specialization, bounds };

[[nodiscard]] inline std::string to_string(HypothesisMode m) {
  return m == HypothesisMode::specialization ? "specialization" : "bounds";
}

struct Requirement {
  std::int64_t j = 0;
  std::int64_t required = 0;
};

struct HypothesisCase {
  std::string source;
  std::vector<Requirement> requirements;
};

/// Height requirements on the lower ideals I_j (Pf_2j for alternating);
/// empty when no case covers the shape.
[[nodiscard]] inline std::optional<HypothesisCase> hypothesis_requirements(const ProblemInstance& inst,
                                                                           HypothesisMode mode) {
  inst.validate();
  const auto m = inst.m, n = inst.n, t = inst.t;
  const bool spec = mode == HypothesisMode::specialization;
  HypothesisCase c;
  std::int64_t top = t - 1;
  auto req = [&](std::int64_t j) -> std::int64_t {
    switch (inst.kind) {
      case MatrixKind::ordinary: return t == m ? (m - j + 1) * (n - m) + 1 : (m - j + 1) * (n - j + 1);
      case MatrixKind::symmetric: return binomial(n - j + 2, 2);
      case MatrixKind::alternating: return 2 * t == n - 1 ? n - 2 * j + 2 : binomial(n - 2 * j + 2, 2);
    }
    return 0;
  };
  switch (inst.kind) {
    case MatrixKind::ordinary:
      if (t == m) {
        c.source = spec ? sources::specialization_i : sources::bound_hypotheses_i;
        top = m - 1;
      } else {
        c.source = spec ? sources::specialization_ii : sources::bound_hypotheses_ii;
      }
      break;
    case MatrixKind::symmetric:
      c.source = spec ? sources::specialization_iii : sources::bound_hypotheses_iii;
      break;
    case MatrixKind::alternating:
      if (2 * t == n - 1)
        c.source = spec ? sources::specialization_iv : sources::bound_hypotheses_iv;
      else if (2 * t < n - 1)
        c.source = spec ? sources::specialization_v : sources::bound_hypotheses_v;
      else
        return std::nullopt;
      break;
  }
  for (std::int64_t j = 1; j <= top; ++j) {
    std::int64_t r = req(j);
    if (!spec) r = std::min(r, inst.d);
    c.requirements.push_back({j, r});
  }
  return c;
}

struct HypothesisEntry {
  std::int64_t j = 0;
  std::int64_t required = 0;
  ExtendedHeight actual;
  bool satisfied = false;
};

struct HypothesisReport {
  HypothesisMode mode = HypothesisMode::specialization;
  std::string source;
  std::vector<HypothesisEntry> per_j;
  bool all_satisfied = true;
};

/// Throws PreconditionError unless the t-th ideal of `a` has generic height.
template <poly::CoefficientField F>
void require_generic_height(const matrix::PolyMatrix<F>& a, std::int64_t t, const Deadline& deadline) {
  const auto gh = groebner::is_generic_height(a, t, deadline);
  if (!gh.generic)
    throw PreconditionError("ideal does not have generic height: ht = " + gh.actual.to_string() +
                            " but the generic value is " + std::to_string(gh.expected));
}

/// Heights of the lower ideals against the requirements of the case.
template <poly::CoefficientField F>
[[nodiscard]] HypothesisReport evaluate_requirements(const matrix::PolyMatrix<F>& a,
                                                     const HypothesisCase& c, HypothesisMode mode,
                                                     const Deadline& deadline) {
  HypothesisReport r;
  r.mode = mode;
  r.source = c.source;
  for (const auto& q : c.requirements) {
    HypothesisEntry e;
    e.j = q.j;
    e.required = q.required;
    e.actual = groebner::kind_ideal(a, q.j).height(deadline);
    e.satisfied = e.actual >= ExtendedHeight(static_cast<std::uint64_t>(q.required));
    r.all_satisfied = r.all_satisfied && e.satisfied;
    r.per_j.push_back(e);
  }
  return r;
}

template <poly::CoefficientField F>
[[nodiscard]] ProblemInstance shape_of(const matrix::PolyMatrix<F>& a, std::int64_t t) {
  ProblemInstance inst{a.kind(),
                       static_cast<std::int64_t>(std::min(a.rows(), a.cols())),
                       static_cast<std::int64_t>(std::max(a.rows(), a.cols())),
                       t,
                       static_cast<std::int64_t>(std::max<std::size_t>(a.ring().nvars(), 1)),
                       a.entry_degree().value_or(0),
                       a.ring().field().spec().characteristic()};
  inst.validate();
  return inst;
}

template <poly::CoefficientField F>
[[nodiscard]] HypothesisReport hypothesis_check(const matrix::PolyMatrix<F>& a, std::int64_t t,
                                                HypothesisMode mode, const Deadline& deadline = {}) {
  groebner::require_t_in_range(a, t);
  const auto inst = shape_of(a, t);
  require_generic_height(a, t, deadline);
  const auto c = hypothesis_requirements(inst, mode);
  if (!c) throw PreconditionError("no " + to_string(mode) + " hypotheses cover " + inst.describe());
  return evaluate_requirements(a, *c, mode, deadline);
}

enum class CohenMacaulay { yes, unknown };

[[nodiscard]] inline std::string to_string(CohenMacaulay c) {
  return c == CohenMacaulay::yes ? "yes" : "unknown";
}

/// Whether the specialized Rees ring is known to be Cohen-Macaulay once the
/// specialization hypotheses hold.
[[nodiscard]] inline CohenMacaulay cohen_macaulay(const ProblemInstance& inst) {
  const auto m = inst.m, n = inst.n, t = inst.t;
  const std::int64_t ch = inst.characteristic;
  switch (inst.kind) {
    case MatrixKind::ordinary:
      if (t == m) return CohenMacaulay::yes;
      return ch == 0 || ch > std::min(t, m - t) ? CohenMacaulay::yes : CohenMacaulay::unknown;
    case MatrixKind::symmetric: return CohenMacaulay::unknown;
    case MatrixKind::alternating:
      if (2 * t == n - 1) return CohenMacaulay::yes;
      if (2 * t < n - 1)
        return ch == 0 || ch > std::min(2 * t, n - 2 * t) ? CohenMacaulay::yes : CohenMacaulay::unknown;
      return CohenMacaulay::unknown;
  }
  return CohenMacaulay::unknown;
}

struct SpecializationReport {
  bool specializes = false;
  CohenMacaulay cohen_macaulay = CohenMacaulay::unknown;
  std::string source;
  HypothesisReport hypotheses;
};

template <poly::CoefficientField F>
[[nodiscard]] SpecializationReport specialization_check(const matrix::PolyMatrix<F>& a, std::int64_t t,
                                                        const Deadline& deadline = {}) {
  SpecializationReport r;
  r.hypotheses = hypothesis_check(a, t, HypothesisMode::specialization, deadline);
  r.source = r.hypotheses.source;
  r.specializes = r.hypotheses.all_satisfied;
  if (r.specializes) r.cohen_macaulay = cohen_macaulay(shape_of(a, t));
  return r;
}

}  // namespace reesdet::bounds
