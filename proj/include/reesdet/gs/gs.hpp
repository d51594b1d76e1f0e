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

#include <cstdint>
#include <string>
#include <vector>

#include "reesdet/combinatorics.hpp"
#include "reesdet/deadline.hpp"
#include "reesdet/errors.hpp"
#include "reesdet/extended.hpp"
#include "reesdet/groebner/ideal.hpp"
#include "reesdet/instance.hpp"

namespace reesdet::gs {

using groebner::ExtendedHeight;

/// theta_j: the height I_j (resp. Pf_2j) needs for G_infinity.
[[nodiscard]] inline std::int64_t gs_threshold(const ProblemInstance& inst, std::int64_t j) {
  inst.validate();
  if (j < 1 || j > inst.t - 1)
    throw InputError("G_s threshold index j=" + std::to_string(j) + " outside 1.." +
                     std::to_string(inst.t - 1));
  const auto m = inst.m, n = inst.n, t = inst.t;
  switch (inst.kind) {
    case MatrixKind::ordinary: return binomial(m - j + 1, m - t) * binomial(n - j + 1, n - t);
    case MatrixKind::symmetric:
      return exact_div(binomial(n - j + 2, n - t) * binomial(n - j + 2, n - t + 1), n - j + 2);
    case MatrixKind::alternating: return binomial(n - 2 * j + 2, n - 2 * t);
  }
  return 0;
}

struct GsEntry {
  std::int64_t j = 0;
  std::int64_t threshold = 0;
  ExtendedHeight actual;
  ExtendedNat required;
  bool satisfied = false;
};

struct GsReport {
  bool generic_height_ok = false;
  ExtendedNat s;
  std::vector<GsEntry> per_j;
  bool satisfied = false;  // G_s for the requested s
  ExtendedNat max_s;
};

/// Evaluates the G_s height conditions on a concrete matrix. Throws
/// PreconditionError unless the t-th ideal has generic height.
template <poly::CoefficientField F>
[[nodiscard]] GsReport check_Gs(const matrix::PolyMatrix<F>& a, std::int64_t t, ExtendedNat s,
                                const Deadline& deadline = {}) {
  if (s == ExtendedNat(0)) throw InputError("G_s needs s >= 1");
  const auto gh = groebner::is_generic_height(a, t, deadline);
  if (!gh.generic)
    throw PreconditionError("ideal does not have generic height: ht = " + gh.actual.to_string() +
                            " but the generic value is " + std::to_string(gh.expected));
  ProblemInstance inst{a.kind(), static_cast<std::int64_t>(std::min(a.rows(), a.cols())),
                       static_cast<std::int64_t>(std::max(a.rows(), a.cols())), t};
  GsReport r;
  r.generic_height_ok = true;
  r.s = s;
  r.satisfied = true;
  r.max_s = ExtendedNat::infinity();
  for (std::int64_t j = 1; j <= t - 1; ++j) {
    GsEntry e;
    e.j = j;
    e.threshold = gs_threshold(inst, j);
    e.actual = groebner::kind_ideal(a, j).height(deadline);
    e.required = min(ExtendedNat(static_cast<std::uint64_t>(e.threshold)), s);
    e.satisfied = e.actual >= e.required;
    r.satisfied = r.satisfied && e.satisfied;
    if (e.actual < ExtendedNat(static_cast<std::uint64_t>(e.threshold))) r.max_s = min(r.max_s, e.actual);
    r.per_j.push_back(e);
  }
  return r;
}

/// Largest s with G_s for the t-th ideal of a generic matrix.
[[nodiscard]] inline ExtendedNat max_Gs_generic(const ProblemInstance& inst) {
  inst.validate();
  const auto m = inst.m, n = inst.n, t = inst.t;
  const auto fin = [](std::int64_t v) { return ExtendedNat(static_cast<std::uint64_t>(v)); };
  switch (inst.kind) {
    case MatrixKind::ordinary:
      if (t == 1 || (t == m && m == n) || (m == n && t == n - 1) || (n == m + 1 && t == m) ||
          (n == m + 2 && t == m) || (m == 2 && n == 5 && t == 2))
        return ExtendedNat::infinity();
      if (t >= 3 && t == m && n == m + 3) return fin(18);
      return fin((m - t + 2) * (n - t + 2));
    case MatrixKind::symmetric:
      if (t == 1 || t == n || t == n - 1) return ExtendedNat::infinity();
      return fin(binomial(n - t + 3, 2));
    case MatrixKind::alternating:
      if (t == 1 || 2 * t == n || 2 * t == n - 1 || 2 * t == n - 2) return ExtendedNat::infinity();
      return fin(binomial(n - 2 * t + 4, 2));
  }
  return ExtendedNat::infinity();
}

/// Minimal number of generators of the t-th ideal of generic height.
[[nodiscard]] inline std::int64_t min_gens_generic(const ProblemInstance& inst) {
  inst.validate();
  const auto m = inst.m, n = inst.n, t = inst.t;
  switch (inst.kind) {
    case MatrixKind::ordinary: return binomial(m, t) * binomial(n, t);
    case MatrixKind::symmetric: return exact_div(binomial(n + 1, t + 1) * binomial(n + 1, t), n + 1);
    case MatrixKind::alternating: return binomial(n, 2 * t);
  }
  return 0;
}

}  // namespace reesdet::gs
