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
#include <utility>

#include "reesdet/errors.hpp"
#include "reesdet/matrix/matrix.hpp"

namespace reesdet {

using matrix::MatrixKind;

/// Shape and grading data of a determinantal problem. For alternating
/// matrices t is the half-size: the ideal is generated by 2t-Pfaffians.
struct ProblemInstance {
  MatrixKind kind = MatrixKind::ordinary;
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t t = 1;
  std::int64_t d = 1;
  std::int64_t delta = 1;
  std::uint32_t characteristic = 0;

  [[nodiscard]] static ProblemInstance ordinary(std::int64_t m, std::int64_t n, std::int64_t t) {
    return {MatrixKind::ordinary, m, n, t};
  }
  [[nodiscard]] static ProblemInstance symmetric(std::int64_t n, std::int64_t t) {
    return {MatrixKind::symmetric, n, n, t};
  }
  [[nodiscard]] static ProblemInstance alternating(std::int64_t n, std::int64_t t) {
    return {MatrixKind::alternating, n, n, t};
  }

  [[nodiscard]] ProblemInstance with_grading(std::int64_t d_, std::int64_t delta_,
                                             std::uint32_t ch) const {
    ProblemInstance r = *this;
    r.d = d_;
    r.delta = delta_;
    r.characteristic = ch;
    return r;
  }

  void validate() const {
    auto fail = [](const std::string& why) { throw InputError("invalid instance: " + why); };
    if (kind != MatrixKind::ordinary && m != n) fail("square kind needs m = n");
    if (m < 1 || m > n) fail("need 1 <= m <= n");
    if (kind == MatrixKind::alternating) {
      if (t < 1 || 2 * t > n) fail("need 2 <= 2t <= n");
    } else if (t < 1 || t > m) {
      fail("need 1 <= t <= m");
    }
    if (d < 1) fail("need d >= 1");
    if (delta < 0) fail("need delta >= 0");
  }

  /// "ordinary 2x3 t=2" style summary.
  [[nodiscard]] std::string describe() const {
    std::string s = std::string(matrix::to_string(kind)) + " " + std::to_string(m) + "x" +
                    std::to_string(n);
    if (kind == MatrixKind::alternating) return s + " 2t=" + std::to_string(2 * t);
    return s + " t=" + std::to_string(t);
  }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Instance of a concrete matrix: d is the number of ring variables and
/// delta the common entry degree.
template <poly::CoefficientField F>
[[nodiscard]] ProblemInstance instance_of(const matrix::PolyMatrix<F>& a, std::int64_t t) {
  const auto delta = a.entry_degree();
  if (!delta)
    throw PreconditionError("matrix entries are not homogeneous of one common degree");
  ProblemInstance inst{a.kind(),
                       static_cast<std::int64_t>(a.rows()),
                       static_cast<std::int64_t>(a.cols()),
                       t,
                       static_cast<std::int64_t>(a.ring().nvars()),
                       static_cast<std::int64_t>(*delta),
                       a.ring().field().spec().characteristic()};
  if (inst.m > inst.n) {
    if (inst.kind != MatrixKind::ordinary) throw InputError("square kind with m > n");
    std::swap(inst.m, inst.n);
  }
  inst.validate();
  return inst;
}

}  // namespace reesdet
