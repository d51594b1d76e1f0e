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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "reesdet/combinatorics.hpp"
#include "reesdet/deadline.hpp"
#include "reesdet/extended.hpp"
#include "reesdet/groebner/buchberger.hpp"
#include "reesdet/matrix/determinant.hpp"

namespace reesdet::groebner {

using ExtendedHeight = ExtendedNat;

/// Krull dimension of K[x_1..x_nvars] modulo the ideal generated by the
/// monomials `lt`: nvars minus the size of a smallest variable set meeting
/// every generator's support. A constant generator gives dimension 0.
[[nodiscard]] inline std::size_t monomial_ideal_dimension(const std::vector<Monomial>& lt,
                                                          std::size_t nvars) {
  if (nvars > 64) throw InputError("monomial dimension supports at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : lt) {
    if (m.size() != nvars) throw InputError("monomial has the wrong variable count");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] != 0) s |= std::uint64_t{1} << i;
    if (s == 0) return 0;
    supports.push_back(s);
  }
  // Only inclusion-minimal supports matter.
  std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint64_t> minimal;
  for (auto s : supports)
    if (std::none_of(minimal.begin(), minimal.end(), [s](std::uint64_t t) { return (t & s) == t; }))
      minimal.push_back(s);

  std::size_t best = nvars;
  auto search = [&](auto&& self, std::uint64_t chosen, std::size_t size) -> void {
    if (size >= best) return;
    const std::uint64_t* open = nullptr;
    for (const auto& s : minimal)
      if ((s & chosen) == 0 && (open == nullptr || std::popcount(s) < std::popcount(*open))) open = &s;
    if (open == nullptr) {
      best = size;
      return;
    }
    if (size + 1 >= best) return;
    for (std::uint64_t bits = *open; bits != 0; bits &= bits - 1)
      self(self, chosen | (bits & -bits), size + 1);
  };
  search(search, 0, 0);
  return nvars - best;
}

/// Ideal given by generators, with a lazily computed and shared Groebner
/// cache. Copies share the cache; population is guarded by a mutex.
template <CoefficientField F>
class IdealHandle {
 public:
  using Poly = Polynomial<F>;

  IdealHandle(RingPtr<F> ring, std::vector<Poly> generators)
      : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
      if (!(g.ring() == *ring_)) throw InputError("ideal generators belong to different rings");
  }

  [[nodiscard]] static IdealHandle unit(RingPtr<F> ring) {
    auto one = Poly::constant(ring, ring->field().one());
    return IdealHandle(std::move(ring), {one});
  }
  [[nodiscard]] static IdealHandle zero(RingPtr<F> ring) { return IdealHandle(std::move(ring), {}); }

  [[nodiscard]] const RingPtr<F>& ring_ptr() const noexcept { return ring_; }
  [[nodiscard]] const std::vector<Poly>& generators() const noexcept { return gens_; }
  [[nodiscard]] MonomialOrder order() const noexcept { return ring_->order(); }

  [[nodiscard]] const std::vector<Poly>& groebner_basis(const Deadline& deadline = {}) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->basis) cache_->basis = buchberger(gens_, deadline);
    return *cache_->basis;
  }

  [[nodiscard]] std::vector<Monomial> lt_ideal(const Deadline& deadline = {}) const {
    std::vector<Monomial> out;
    for (const auto& g : groebner_basis(deadline)) out.push_back(g.leading_monomial());
    return out;
  }

  [[nodiscard]] bool is_unit(const Deadline& deadline = {}) const {
    const auto& b = groebner_basis(deadline);
    return b.size() == 1 && b.front().is_constant();
  }

  /// +inf for the unit ideal, 0 for the zero ideal, otherwise
  /// nvars - dim R/LT(I).
  [[nodiscard]] ExtendedHeight height(const Deadline& deadline = {}) const {
    const auto lt = lt_ideal(deadline);
    std::lock_guard lock(cache_->mutex);
    if (!cache_->height) {
      if (std::any_of(lt.begin(), lt.end(), [](const Monomial& m) { return m.is_one(); }))
        cache_->height = ExtendedHeight::infinity();
      else
        cache_->height = ExtendedHeight(ring_->nvars() - monomial_ideal_dimension(lt, ring_->nvars()));
    }
    return *cache_->height;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Poly>> basis;
    std::optional<ExtendedHeight> height;
  };

  RingPtr<F> ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

template <CoefficientField F>
[[nodiscard]] ExtendedHeight height(const IdealHandle<F>& ideal, const Deadline& deadline = {}) {
  return ideal.height(deadline);
}

/// I_t(M): the unit ideal for t <= 0, the zero ideal for t > min(m, n).
template <CoefficientField F>
[[nodiscard]] IdealHandle<F> ideal_of_minors(const matrix::PolyMatrix<F>& m, long t) {
  if (t <= 0) return IdealHandle<F>::unit(m.ring_ptr());
  if (static_cast<std::size_t>(t) > std::min(m.rows(), m.cols())) return IdealHandle<F>::zero(m.ring_ptr());
  return IdealHandle<F>(m.ring_ptr(), matrix::enumerate_minors(m, static_cast<std::size_t>(t)));
}

/// Pf_{2t}(M) for an alternating M: the unit ideal for two_t <= 0, the zero
/// ideal for two_t > n.
template <CoefficientField F>
[[nodiscard]] IdealHandle<F> ideal_of_pfaffians(const matrix::PolyMatrix<F>& m, long two_t) {
  if (m.kind() != matrix::MatrixKind::alternating)
    throw InputError("Pfaffian ideals require an alternating matrix");
  if (two_t <= 0) return IdealHandle<F>::unit(m.ring_ptr());
  if (two_t % 2 != 0) throw InputError("Pfaffian size must be even");
  if (static_cast<std::size_t>(two_t) > m.rows()) return IdealHandle<F>::zero(m.ring_ptr());
  return IdealHandle<F>(m.ring_ptr(), matrix::enumerate_pfaffians(m, static_cast<std::size_t>(two_t)));
}

/// The j-th determinantal ideal of M in the sense of its kind: I_j(M) for
/// ordinary and symmetric matrices, Pf_{2j}(M) for alternating ones.
template <CoefficientField F>
[[nodiscard]] IdealHandle<F> kind_ideal(const matrix::PolyMatrix<F>& m, long j) {
  return m.kind() == matrix::MatrixKind::alternating ? ideal_of_pfaffians(m, 2 * j)
                                                     : ideal_of_minors(m, j);
}

/// Largest possible height of the t-th ideal of a matrix of this kind and
/// shape; for alternating matrices t is the half-size of the Pfaffians.
[[nodiscard]] inline std::int64_t generic_height(matrix::MatrixKind kind, std::int64_t m,
                                                 std::int64_t n, std::int64_t t) {
  switch (kind) {
    case matrix::MatrixKind::ordinary: return (m - t + 1) * (n - t + 1);
    case matrix::MatrixKind::symmetric: return binomial(n - t + 2, 2);
    case matrix::MatrixKind::alternating: return binomial(n - 2 * t + 2, 2);
  }
  return 0;
}

/// Checks the range of t for a matrix of the given kind; alternating t is
/// the half-size of the Pfaffians.
template <CoefficientField F>
void require_t_in_range(const matrix::PolyMatrix<F>& m, long t) {
  const long rows = static_cast<long>(m.rows()), cols = static_cast<long>(m.cols());
  if (m.kind() == matrix::MatrixKind::alternating) {
    if (t < 1 || 2 * t > rows)
      throw InputError("Pfaffian half-size t=" + std::to_string(t) + " out of range for n=" +
                       std::to_string(rows));
  } else if (t < 1 || t > std::min(rows, cols)) {
    throw InputError("minor size t=" + std::to_string(t) + " out of range");
  }
}

struct GenericHeightReport {
  bool generic = false;
  ExtendedHeight actual;
  std::int64_t expected = 0;
};

template <CoefficientField F>
[[nodiscard]] GenericHeightReport is_generic_height(const matrix::PolyMatrix<F>& m, long t,
                                                    const Deadline& deadline = {}) {
  require_t_in_range(m, t);
  GenericHeightReport r;
  r.expected = generic_height(m.kind(), static_cast<std::int64_t>(m.rows()),
                              static_cast<std::int64_t>(m.cols()), t);
  r.actual = kind_ideal(m, t).height(deadline);
  r.generic = r.actual == ExtendedHeight(static_cast<std::uint64_t>(r.expected));
  return r;
}

}  // namespace reesdet::groebner
