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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reesdet/errors.hpp"

namespace reesdet {

/// C(n, k); zero outside 0 <= k <= n.
[[nodiscard]] constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Integer division that must be exact.
[[nodiscard]] inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (b == 0 || a % b != 0) throw Error("inexact integer division");
  return a / b;
}

/// All k-subsets of {0, ..., n-1} as increasing index lists, in
/// lexicographic order.
[[nodiscard]] inline std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                                        std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace reesdet
