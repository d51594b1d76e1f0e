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
#include <optional>
#include <string>
#include <vector>

#include "reesdet/bounds/hypotheses.hpp"
#include "reesdet/deadline.hpp"
#include "reesdet/instance.hpp"
#include "reesdet/sources.hpp"

namespace reesdet::bounds {

enum class Claim {
  linear_type,
  fiber_type,
  rees_specializes,
  rees_cohen_macaulay,
  ideal_annihilated_by_maximal_ideal,
  relations_vanish_up_to_k,  // A_k(I) = 0 for all k <= up_to_k
};

[[nodiscard]] inline std::string to_string(Claim c) {
  switch (c) {
    case Claim::linear_type: return "linear_type";
    case Claim::fiber_type: return "fiber_type";
    case Claim::rees_specializes: return "rees_specializes";
    case Claim::rees_cohen_macaulay: return "rees_cohen_macaulay";
    case Claim::ideal_annihilated_by_maximal_ideal: return "ideal_annihilated_by_maximal_ideal";
    case Claim::relations_vanish_up_to_k: return "relations_vanish_up_to_k";
  }
  return {};
}

[[nodiscard]] inline Claim parse_claim(const std::string& s) {
  for (Claim c : {Claim::linear_type, Claim::fiber_type, Claim::rees_specializes,
                  Claim::rees_cohen_macaulay, Claim::ideal_annihilated_by_maximal_ideal,
                  Claim::relations_vanish_up_to_k})
    if (to_string(c) == s) return c;
  throw InputError("unknown claim '" + s + "'");
}

struct Conclusion {
  Claim claim = Claim::linear_type;
  std::string source;
  bool hypotheses_verified = false;
  std::optional<std::int64_t> up_to_k;

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

/// Which height hypotheses hold; each flag covers the generic-height
/// requirement as well.
struct Attestation {
  bool specialization = false;
  bool bounds = false;
};

struct ClassificationReport {
  std::vector<Conclusion> conclusions;
  std::optional<HypothesisReport> specialization;
  std::optional<HypothesisReport> bounds;

  [[nodiscard]] bool has(Claim c) const {
    for (const auto& x : conclusions)
      if (x.claim == c) return true;
    return false;
  }
  [[nodiscard]] const Conclusion* find(Claim c, std::string_view source) const {
    for (const auto& x : conclusions)
      if (x.claim == c && x.source == source) return &x;
    return nullptr;
  }
};

/// Conclusions whose shape conditions match the instance and whose height
/// hypotheses are attested.
[[nodiscard]] inline std::vector<Conclusion> classify_instance(const ProblemInstance& inst,
                                                               const Attestation& att) {
  inst.validate();
  std::vector<Conclusion> out;
  auto emit = [&](Claim c, std::string_view src, std::optional<std::int64_t> k = std::nullopt) {
    out.push_back({c, std::string(src), true, k});
  };
  const auto m = inst.m, n = inst.n, t = inst.t, d = inst.d, delta = inst.delta;
  const auto ch = inst.characteristic;
  const bool ord = inst.kind == MatrixKind::ordinary;
  const bool sym = inst.kind == MatrixKind::symmetric;
  const bool alt = inst.kind == MatrixKind::alternating;

  if (att.specialization) {
    if (auto c = hypothesis_requirements(inst, HypothesisMode::specialization)) {
      emit(Claim::rees_specializes, c->source);
      if (cohen_macaulay(inst) == CohenMacaulay::yes) emit(Claim::rees_cohen_macaulay, c->source);
    }
    if (ord && n == m + 1 && t == m) emit(Claim::linear_type, sources::linfib_i);
    if (ord && m == n && n >= 2 && t == n - 1) emit(Claim::linear_type, sources::linfib_ii);
    if (sym && n >= 2 && t == n - 1) emit(Claim::linear_type, sources::linfib_iii);
    if (alt && n % 2 == 1 && n >= 3 && 2 * t == n - 1) emit(Claim::linear_type, sources::linfib_iv);
    if (alt && ch != 2 && n % 2 == 0 && n >= 4 && 2 * t == n - 2) emit(Claim::linear_type, sources::linfib_v);
    if (ord && t == m) emit(Claim::fiber_type, sources::linfib_vi);
    if (ord && ch == 0 && m == 3 && n >= 3 && t == 2) emit(Claim::fiber_type, sources::linfib_vii);
  }

  if (att.bounds) {
    if (ord && t == m) {
      if (delta == 1) emit(Claim::fiber_type, sources::maximal_minors_cor_a);
      if (n == m + 1 && d > m) emit(Claim::linear_type, sources::maximal_minors_cor_b);
      if (n == m + 1 && d <= m && delta == 1)
        emit(Claim::ideal_annihilated_by_maximal_ideal, sources::maximal_minors_cor_c);
      if (n >= m + 2 && d > m * (n - m) + 1) emit(Claim::fiber_type, sources::maximal_minors_cor_d);
    }
    if (ord && ch == 0 && m == 3 && n >= 3 && t == 2 && delta == 1) emit(Claim::fiber_type, sources::two_minors_cor);
    if (ord && ch == 0 && m == 3 && n == 3 && t == 2 && delta == 1) {
      emit(Claim::fiber_type, sources::square_submaximal_cor);
      emit(Claim::ideal_annihilated_by_maximal_ideal, sources::square_submaximal_cor);
    }
    if (alt && n % 2 == 1 && 2 * t == n - 1) {
      if (d >= n) emit(Claim::linear_type, sources::submaximal_pfaffians_cor_a);
      if (delta == 1) emit(Claim::fiber_type, sources::submaximal_pfaffians_cor_b);
      if (d - 2 >= 1) emit(Claim::relations_vanish_up_to_k, sources::submaximal_pfaffians_cor_c, d - 2);
      if (d % 2 == 1 && d - 1 >= 1)
        emit(Claim::relations_vanish_up_to_k, sources::submaximal_pfaffians_cor_d, d - 1);
      if (d % 2 == 1 && delta == 1)
        emit(Claim::ideal_annihilated_by_maximal_ideal, sources::submaximal_pfaffians_cor_e);
    }
    if (alt && ch == 0 && n == 6 && 2 * t == 4 && delta == 1) {
      emit(Claim::fiber_type, sources::pfaffians_six);
      emit(Claim::ideal_annihilated_by_maximal_ideal, sources::pfaffians_six);
    }
  }
  return out;
}

/// Verifies every height hypothesis with Groebner bases and reports the
/// conclusions that follow. Throws PreconditionError when the entries are
/// not homogeneous of one degree or the ideal lacks generic height.
template <poly::CoefficientField F>
[[nodiscard]] ClassificationReport classify(const matrix::PolyMatrix<F>& a, std::int64_t t,
                                            const Deadline& deadline = {}) {
  groebner::require_t_in_range(a, t);
  const auto inst = instance_of(a, t);
  require_generic_height(a, t, deadline);
  ClassificationReport r;
  Attestation att;
  if (auto c = hypothesis_requirements(inst, HypothesisMode::specialization)) {
    r.specialization = evaluate_requirements(a, *c, HypothesisMode::specialization, deadline);
    att.specialization = r.specialization->all_satisfied;
  }
  if (auto c = hypothesis_requirements(inst, HypothesisMode::bounds)) {
    r.bounds = evaluate_requirements(a, *c, HypothesisMode::bounds, deadline);
    att.bounds = r.bounds->all_satisfied;
  }
  r.conclusions = classify_instance(inst, att);
  return r;
}

}  // namespace reesdet::bounds
