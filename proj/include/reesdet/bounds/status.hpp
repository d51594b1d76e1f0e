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
#include <vector>

#include "reesdet/instance.hpp"
#include "reesdet/sources.hpp"

namespace reesdet::bounds {

enum class GenericFact { linear_type, fiber_type, td_finite_all_k, td_infinite_some_k };

[[nodiscard]] inline std::string to_string(GenericFact f) {
  switch (f) {
    case GenericFact::linear_type: return "linear_type";
    case GenericFact::fiber_type: return "fiber_type";
    case GenericFact::td_finite_all_k: return "td_finite_all_k";
    case GenericFact::td_infinite_some_k: return "td_infinite_some_k";
  }
  return {};
}

/// What is known about the defining ideal of the Rees ring of the generic
/// ideal J of the instance's shape.
struct GenericStatus {
  struct Entry {
    GenericFact fact;
    std::string source;
  };
  std::vector<Entry> facts;

  [[nodiscard]] bool has(GenericFact f) const {
    for (const auto& e : facts)
      if (e.fact == f) return true;
    return false;
  }
  [[nodiscard]] bool linear_type() const { return has(GenericFact::linear_type); }
  [[nodiscard]] bool fiber_type() const { return has(GenericFact::fiber_type); }
  [[nodiscard]] bool td_finite_all_k() const { return has(GenericFact::td_finite_all_k); }
  [[nodiscard]] bool td_infinite_some_k() const { return has(GenericFact::td_infinite_some_k); }
};

[[nodiscard]] inline GenericStatus generic_status(const ProblemInstance& inst) {
  inst.validate();
  GenericStatus s;
  auto add = [&](GenericFact f, std::string_view family, char clause) {
    if (!s.has(f)) s.facts.push_back({f, std::string(family) + clause});
  };
  // Linear type makes every A_k(J) vanish: fiber type and td = -inf follow.
  auto linear = [&](std::string_view family, char clause) {
    add(GenericFact::linear_type, family, clause);
    add(GenericFact::fiber_type, family, clause);
    add(GenericFact::td_finite_all_k, family, clause);
  };
  const auto m = inst.m, n = inst.n, t = inst.t;
  switch (inst.kind) {
    case MatrixKind::ordinary: {
      const auto f = sources::status_ordinary;
      if (t == 1) linear(f, 'a');
      if (n <= m + 1 && t == m) linear(f, 'b');
      // Needs t >= 3: for t = 1 the ideal is generated by variables, and for
      // t = 2 inverting an entry leaves the ideal of a 1 x (n-1) generic row.
      if (n >= m + 2 && t == m && t >= 3) add(GenericFact::td_infinite_some_k, f, 'c');
      if (t == m) add(GenericFact::fiber_type, f, 'd');
      if (n == m && t == n - 1) linear(f, 'e');
      if (inst.characteristic == 0 && m == 3 && t == 2) add(GenericFact::fiber_type, f, 'f');
      if (t == 2) add(GenericFact::td_finite_all_k, f, 'g');
      if (2 < t && t < m && !(t + 1 == m && m == n)) add(GenericFact::td_infinite_some_k, f, 'h');
      break;
    }
    case MatrixKind::symmetric: {
      const auto f = sources::status_symmetric;
      if (t == 1) linear(f, 'a');
      if (t == n) linear(f, 'b');
      if (t == n - 1) linear(f, 'c');
      if (t == 2) add(GenericFact::td_finite_all_k, f, 'd');
      if (2 < t && t < n - 1) add(GenericFact::td_infinite_some_k, f, 'e');
      break;
    }
    case MatrixKind::alternating: {
      const auto f = sources::status_alternating;
      const auto two_t = 2 * t;
      if (two_t == 2) linear(f, 'a');
      if (two_t == n) linear(f, 'b');
      if (two_t == n - 1) linear(f, 'c');
      if (inst.characteristic != 2 && two_t == n - 2) linear(f, 'd');
      if (two_t == 4) add(GenericFact::td_finite_all_k, f, 'e');
      if (4 < two_t && two_t < n - 2) add(GenericFact::td_infinite_some_k, f, 'f');
      break;
    }
  }
  return s;
}

}  // namespace reesdet::bounds
