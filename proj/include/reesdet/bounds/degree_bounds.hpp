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

#include "reesdet/bounds/bound_value.hpp"
#include "reesdet/bounds/status.hpp"
#include "reesdet/errors.hpp"
#include "reesdet/instance.hpp"
#include "reesdet/resolutions/resolutions.hpp"
#include "reesdet/sources.hpp"

namespace reesdet::bounds {

/// Degree-bound families, one per shape. Shapes covered by several
/// statements go to the first in this list.
enum class BoundFamily {
  maximal_minors,         // ordinary t = m
  two_minors,             // ordinary t = 2 < m, char 0
  square_submaximal,      // ordinary m = n, t = n - 1, char 0
  ordinary_minors,        // ordinary 2 < t < m, char 0
  symmetric_submaximal,   // symmetric t = n - 1
  submaximal_pfaffians,   // alternating 2t = n - 1
  pfaffians_n_minus_2,    // alternating 2t = n - 2, char 0
  pfaffians_four,         // alternating 2t = 4, char 0
  pfaffians_general,      // alternating 4 < 2t < n - 2, char 0
};

[[nodiscard]] inline std::string_view family_source(BoundFamily f) {
  switch (f) {
    case BoundFamily::maximal_minors: return sources::maximal_minors;
    case BoundFamily::two_minors: return sources::regularity_two_minors;
    case BoundFamily::square_submaximal: return sources::square_submaximal;
    case BoundFamily::ordinary_minors: return sources::ordinary_minors;
    case BoundFamily::symmetric_submaximal: return sources::symmetric_submaximal;
    case BoundFamily::submaximal_pfaffians: return sources::submaximal_pfaffians;
    case BoundFamily::pfaffians_n_minus_2: return sources::pfaffians_n_minus_2;
    case BoundFamily::pfaffians_four: return sources::pfaffians_four;
    case BoundFamily::pfaffians_general: return sources::pfaffians_general;
  }
  return {};
}

[[nodiscard]] inline bool needs_characteristic_zero(BoundFamily f) {
  return f != BoundFamily::maximal_minors && f != BoundFamily::symmetric_submaximal &&
         f != BoundFamily::submaximal_pfaffians;
}

/// The family whose statement covers the shape (ignoring k, d, delta and
/// the characteristic); empty when none does.
[[nodiscard]] inline std::optional<BoundFamily> dispatch(const ProblemInstance& inst) {
  inst.validate();
  const auto m = inst.m, n = inst.n, t = inst.t;
  switch (inst.kind) {
    case MatrixKind::ordinary:
      if (t == m) return BoundFamily::maximal_minors;
      if (t == 2) return BoundFamily::two_minors;
      if (m == n && t == n - 1) return BoundFamily::square_submaximal;
      if (t > 2) return BoundFamily::ordinary_minors;
      return std::nullopt;
    case MatrixKind::symmetric:
      if (n >= 2 && t == n - 1) return BoundFamily::symmetric_submaximal;
      return std::nullopt;
    case MatrixKind::alternating: {
      const auto two_t = 2 * t;
      if (n % 2 == 1 && two_t == n - 1) return BoundFamily::submaximal_pfaffians;
      if (n % 2 == 0 && n >= 4 && two_t == n - 2) return BoundFamily::pfaffians_n_minus_2;
      if (two_t == 4 && n >= 4 && two_t < n) return BoundFamily::pfaffians_four;
      if (4 < two_t && two_t < n - 2) return BoundFamily::pfaffians_general;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct DegreeBounds {
  bool applicable = false;
  BoundValue b0 = BoundValue::pos_infinity();
  BoundValue td = BoundValue::pos_infinity();
  std::string source;
  std::string note;
};

namespace detail {

inline std::string scaled(std::int64_t delta, const std::string& what) {
  return delta == 1 ? what : std::to_string(delta) + "*" + what;
}

}  // namespace detail

/// Bounds on b0 and td of A_k(I) for the t-th ideal I of a matrix of the
/// instance's shape. The caller attests that the capped height hypotheses
/// were verified.
[[nodiscard]] inline DegreeBounds degree_bounds(const ProblemInstance& inst, std::int64_t k,
                                                bool hypotheses_attested) {
  inst.validate();
  if (!hypotheses_attested)
    throw PreconditionError("degree bounds need verified height hypotheses");
  if (k < 1) throw InputError("power k must be positive");
  const auto family = dispatch(inst);
  if (!family) throw PreconditionError("no degree-bound statement covers " + inst.describe());
  if (needs_characteristic_zero(*family) && inst.characteristic != 0)
    throw PreconditionError(std::string(family_source(*family)) +
                            " needs characteristic 0, field has characteristic " +
                            std::to_string(inst.characteristic));

  using resolutions::NSelector;
  using resolutions::n_constants;
  const auto m = inst.m, n = inst.n, t = inst.t, d = inst.d, delta = inst.delta;
  const std::int64_t base_b0 = (d - 1) * (delta - 1);
  const std::int64_t base_td = d * (delta - 1);
  const std::string ks = std::to_string(k);
  const std::string gen_b0 = detail::scaled(delta, "b0(A_" + ks + "(J))");
  const std::string gen_td = detail::scaled(delta, "td(A_" + ks + "(J))");
  // A linear-type generic ideal has A_k(J) = 0, so the generic term drops.
  const auto status = generic_status(inst);
  auto cond = [&](const std::string& term, std::int64_t v) {
    return status.linear_type() ? BoundValue::finite(v) : BoundValue::conditional(term, v);
  };

  DegreeBounds r;
  r.applicable = true;
  auto not_applicable = [&](std::string why) {
    r.applicable = false;
    r.source = family_source(*family);
    r.note = std::move(why);
    return r;
  };
  auto vanish = [&](std::string_view src) {
    r.b0 = BoundValue::neg_infinity();
    r.td = BoundValue::neg_infinity();
    r.source = src;
    return r;
  };

  switch (*family) {
    case BoundFamily::maximal_minors: {
      if (n == m) return vanish(sources::maximal_minors_a);
      if (n == m + 1) {
        if (d > std::min(k, m)) return vanish(sources::maximal_minors_b);
        r.b0 = BoundValue::finite(base_b0);
        r.td = BoundValue::finite(base_td);
        r.source = sources::maximal_minors_b;
        return r;
      }
      r.source = sources::maximal_minors_c;
      r.b0 = BoundValue::finite(d - 1 > std::min(k, m) * (n - m) ? 0 : base_b0);
      r.note = "no td bound: td(A_k(J)) is infinite for some k";
      return r;
    }
    case BoundFamily::two_minors: {
      if (m == 3) {
        r.source = sources::two_minors_a;
        r.b0 = BoundValue::finite(base_b0);
        r.td = cond(gen_td, base_td);
        return r;
      }
      r.source = sources::two_minors_b;
      if (k == 1) return not_applicable("the statement covers k >= 2");
      const std::int64_t extra = k <= m - 2 ? delta * (m - k - 1) : 0;
      r.b0 = cond(gen_b0, base_b0 + extra);
      r.td = cond(gen_td, base_td + extra);
      return r;
    }
    case BoundFamily::square_submaximal: {
      if (k < n - 1) return not_applicable("the statement covers k >= " + std::to_string(n - 1));
      const auto c = delta * n_constants(NSelector::square_submax, n);
      r.source = sources::square_submaximal;
      r.b0 = BoundValue::finite(base_b0 + c);
      r.td = BoundValue::finite(base_td + c);
      return r;
    }
    case BoundFamily::ordinary_minors: {
      if (k < m - 1) return not_applicable("the statement covers k >= " + std::to_string(m - 1));
      r.source = sources::ordinary_minors;
      r.b0 = cond(gen_b0, base_b0 + delta * n_constants(NSelector::ordinary_minors, t));
      r.note = "no td bound: td(A_k(J)) is infinite for some k";
      return r;
    }
    case BoundFamily::symmetric_submaximal: {
      r.source = sources::symmetric_submaximal;
      r.b0 = BoundValue::symbolic(detail::scaled(delta, "b0(F^" + ks + "_" + std::to_string(d - 1) + ")"),
                                  -(d - 1));
      r.td = BoundValue::symbolic(detail::scaled(delta, "b0(F^" + ks + "_" + std::to_string(d) + ")"), -d);
      r.note = "F^k is a minimal resolution of J^k; its degrees are not known";
      return r;
    }
    case BoundFamily::submaximal_pfaffians: {
      if (k >= d && d <= n - 1) {
        r.source = sources::submaximal_pfaffians_a;
        r.b0 = BoundValue::finite(base_b0);
        r.td = BoundValue::finite(base_td);
        return r;
      }
      if (d % 2 == 0 && d <= n - 1 && k == d - 1) {
        r.source = sources::submaximal_pfaffians_b;
        r.b0 = BoundValue::finite(base_b0);
        r.td = BoundValue::finite(base_b0 + exact_div(delta * (n - d + 1), 2) - 1);
        return r;
      }
      if (d % 2 == 1 && k == d - 1) return vanish(sources::submaximal_pfaffians_c);
      return vanish(sources::submaximal_pfaffians_d);
    }
    case BoundFamily::pfaffians_n_minus_2: {
      if (k < n - 2) return not_applicable("the statement covers k >= " + std::to_string(n - 2));
      const auto c = delta * n_constants(NSelector::pfaff_n_minus_2, n);
      r.source = n % 4 == 0 ? sources::pfaffians_n_minus_2_a : sources::pfaffians_n_minus_2_b;
      r.b0 = BoundValue::finite(base_b0 + c);
      r.td = BoundValue::finite(base_td + c);
      return r;
    }
    case BoundFamily::pfaffians_four:
    case BoundFamily::pfaffians_general: {
      const std::int64_t k_min = n % 2 == 0 ? n - 2 : n - 3;
      if (k < k_min) return not_applicable("the statement covers k >= " + std::to_string(k_min));
      if (*family == BoundFamily::pfaffians_four) {
        r.source = sources::pfaffians_four;
        r.b0 = cond(gen_b0, base_b0);
        r.td = cond(gen_td, base_td);
        r.note = "td(A_k(J)) is finite for every k";
        return r;
      }
      r.source = sources::pfaffians_general;
      r.b0 = cond(gen_b0, base_b0 + delta * n_constants(NSelector::pfaff_general, t));
      r.note = "no td bound: td(A_k(J)) is infinite for some k";
      return r;
    }
  }
  return r;
}

}  // namespace reesdet::bounds
