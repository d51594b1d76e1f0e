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
#include <string_view>

#include "reesdet/combinatorics.hpp"
#include "reesdet/errors.hpp"
#include "reesdet/instance.hpp"
#include "reesdet/sources.hpp"

namespace reesdet::resolutions {

/// Generation degree of a free module in a resolution; -inf for the zero
/// module.
class DegreeEntry {
 public:
  [[nodiscard]] static constexpr DegreeEntry neg_infinity() { return DegreeEntry(); }
  [[nodiscard]] static constexpr DegreeEntry finite(std::int64_t v) { return DegreeEntry(v); }

  [[nodiscard]] constexpr bool is_neg_infinity() const noexcept { return !finite_; }
  [[nodiscard]] constexpr bool is_finite() const noexcept { return finite_; }
  [[nodiscard]] constexpr std::int64_t value() const noexcept { return finite_ ? value_ : 0; }

  [[nodiscard]] std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

  friend constexpr bool operator==(const DegreeEntry&, const DegreeEntry&) = default;

 private:
  constexpr DegreeEntry() = default;
  constexpr explicit DegreeEntry(std::int64_t v) : finite_(true), value_(v) {}

  bool finite_ = false;
  std::int64_t value_ = 0;
};

/// b0 of the i-th module in the linear resolution of the k-th power of the
/// maximal minors of a generic m x n matrix (twisted to start in degree 0).
[[nodiscard]] inline DegreeEntry abw_generation_degree(std::int64_t m, std::int64_t n,
                                                       std::int64_t k, std::int64_t i) {
  if (m < 1 || m > n || k < 1 || i < 0)
    throw InputError("resolution degree needs 1 <= m <= n, k >= 1, i >= 0");
  if (i == 0) return DegreeEntry::finite(0);
  if (i <= std::min(k, m) * (n - m)) return DegreeEntry::finite(i);
  return DegreeEntry::neg_infinity();
}

/// b0 of the i-th module in the resolution of the k-th power of the
/// submaximal Pfaffians of a generic n x n alternating matrix, n odd.
[[nodiscard]] inline DegreeEntry ku_generation_degree(std::int64_t n, std::int64_t k,
                                                      std::int64_t i) {
  if (n < 3 || n % 2 == 0) throw InputError("submaximal Pfaffian resolutions need odd n >= 3");
  if (k < 1 || i < 0) throw InputError("resolution degree needs k >= 1, i >= 0");
  if (i <= std::min(k, n - 1)) return DegreeEntry::finite(i);
  if (i == k + 1 && i <= n - 1 && k % 2 == 1)
    return DegreeEntry::finite((i - 1) + exact_div(n - i + 1, 2));
  return DegreeEntry::neg_infinity();
}

/// max_k pdim of J^k for the generic ideal of the instance's shape.
[[nodiscard]] inline std::int64_t max_pdim_powers(const ProblemInstance& inst) {
  inst.validate();
  const auto m = inst.m, n = inst.n, t = inst.t;
  switch (inst.kind) {
    case MatrixKind::ordinary: return t == m ? m * (n - m) : m * n - 1;
    case MatrixKind::symmetric:
      if (t == n) break;
      return binomial(n + 1, 2) - 1;
    case MatrixKind::alternating:
      if (2 * t == n) break;
      return 2 * t == n - 1 ? n - 1 : binomial(n, 2) - 1;
  }
  throw PreconditionError("no projective dimension value for " + inst.describe() +
                          " (principal ideal case)");
}

/// Least i from which the j-th lower ideal lies in the radical of the i-th
/// Fitting ideal of every resolution of J^k.
[[nodiscard]] inline std::int64_t sigma_threshold(const ProblemInstance& inst, std::int64_t j) {
  inst.validate();
  const auto m = inst.m, n = inst.n, t = inst.t;
  const std::int64_t top = inst.kind == MatrixKind::ordinary && t == m ? m - 1 : t - 1;
  if (j < 1 || j > top)
    throw InputError("containment index j=" + std::to_string(j) + " outside 1.." +
                     std::to_string(top));
  switch (inst.kind) {
    case MatrixKind::ordinary: return t == m ? (m - j) * (n - m) + 1 : (m - j) * (n - j);
    case MatrixKind::symmetric: return binomial(n - j + 1, 2);
    case MatrixKind::alternating: return 2 * t == n - 1 ? n - 2 * j : binomial(n - 2 * j, 2);
  }
  return 0;
}

enum class NSelector { square_submax, ordinary_minors, pfaff_n_minus_2, pfaff_general };

[[nodiscard]] inline std::string_view to_string(NSelector s) noexcept {
  switch (s) {
    case NSelector::square_submax: return "square_submax";
    case NSelector::ordinary_minors: return "ordinary_minors";
    case NSelector::pfaff_n_minus_2: return "pfaff_n_minus_2";
    case NSelector::pfaff_general: return "pfaff_general";
  }
  return "square_submax";
}

/// Correction constants N(.) in the regularity-based degree bounds.
[[nodiscard]] inline std::int64_t n_constants(NSelector s, std::int64_t arg) {
  auto range = [&](bool ok) {
    if (!ok)
      throw InputError("argument " + std::to_string(arg) + " outside the range of N constant " +
                       std::string(to_string(s)));
  };
  switch (s) {
    case NSelector::square_submax:
      range(arg >= 2);
      return arg % 2 == 0 ? exact_div((arg - 2) * (arg - 2), 4) : exact_div((arg - 3) * (arg - 1), 4);
    case NSelector::ordinary_minors:
      range(arg >= 3);
      return arg % 2 == 1 ? exact_div((arg - 1) * (arg - 1), 4) : exact_div((arg - 2) * arg, 4);
    case NSelector::pfaff_n_minus_2:
      range(arg >= 4 && arg % 2 == 0);
      return arg % 4 == 0 ? exact_div((arg - 4) * (arg - 4), 8) : exact_div((arg - 2) * (arg - 6), 8);
    case NSelector::pfaff_general:
      range(arg >= 3);
      return arg % 2 == 0 ? arg * exact_div(arg - 2, 2) : exact_div((arg - 1) * (arg - 1), 2);
  }
  return 0;
}

struct RegularityValue {
  std::optional<std::int64_t> value;  // empty: not known
  std::string_view source;
};

/// Regularity of J^k where it is known in characteristic zero.
[[nodiscard]] inline RegularityValue regularity_power(const ProblemInstance& inst, std::int64_t k) {
  inst.validate();
  if (inst.characteristic != 0)
    throw PreconditionError("regularity values of powers are only known in characteristic 0");
  if (k < 1) throw InputError("power k must be positive");
  const auto m = inst.m, n = inst.n, t = inst.t;
  if (inst.kind != MatrixKind::ordinary || t == m) return {};
  if (t == 2) {
    if (k >= 2 && k <= m - 2) return {k + m - 1, sources::regularity_two_minors};
    if (k >= m - 1) return {2 * k, sources::regularity_two_minors};
    return {};
  }
  if (m == n && t == n - 1) {
    if (k >= n - 1) return {k * (n - 1) + n_constants(NSelector::square_submax, n), sources::regularity_square};
    return {};
  }
  if (k >= m - 1) return {t * k + n_constants(NSelector::ordinary_minors, t), sources::regularity_minors};
  return {};
}

}  // namespace reesdet::resolutions
