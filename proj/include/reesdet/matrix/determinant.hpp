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
#include <string>
#include <unordered_map>
#include <vector>

#include "reesdet/combinatorics.hpp"
#include "reesdet/errors.hpp"
#include "reesdet/matrix/matrix.hpp"

namespace reesdet::matrix {

/// Determinant by Laplace expansion along successive rows, memoized on the
/// set of columns still available.
template <CoefficientField F>
[[nodiscard]] Polynomial<F> determinant_cofactor(const PolyMatrix<F>& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > 24) throw InputError("cofactor expansion limited to 24x24");
  const auto& ring = a.ring_ptr();
  std::unordered_map<std::uint32_t, Polynomial<F>> memo;
  // det of rows [n - popcount(cols), n) restricted to the column set `cols`
  auto rec = [&](auto&& self, std::uint32_t cols) -> Polynomial<F> {
    if (cols == 0) return Polynomial<F>::constant(ring, ring->field().one());
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
    Polynomial<F> sum(ring);
    bool negative = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      const auto& e = a(row, j);
      if (!e.is_zero()) {
        Polynomial<F> term = e * self(self, cols & ~(1u << j));
        sum = negative ? sum - term : sum + term;
      }
      negative = !negative;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(rec, n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

/// Fraction-free (Bareiss) elimination with row pivoting.
template <CoefficientField F>
[[nodiscard]] Polynomial<F> determinant_bareiss(const PolyMatrix<F>& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  const auto& ring = a.ring_ptr();
  if (n == 0) return Polynomial<F>::constant(ring, ring->field().one());
  std::vector<std::vector<Polynomial<F>>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(a(i, j));
  bool negate = false;
  Polynomial<F> prev = Polynomial<F>::constant(ring, ring->field().one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Polynomial<F>(ring);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial<F>(ring);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Memoized cofactor expansion up to 10x10, fraction-free elimination above.
template <CoefficientField F>
[[nodiscard]] Polynomial<F> determinant(const PolyMatrix<F>& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  return a.rows() <= 10 ? determinant_cofactor(a) : determinant_bareiss(a);
}

namespace detail {
template <CoefficientField F>
PolyMatrix<F> delete_row_col(const PolyMatrix<F>& a, std::size_t r, std::size_t c) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (i != r) rows.push_back(i);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != c) cols.push_back(j);
  return a.submatrix(rows, cols);
}
}  // namespace detail

/// adj(A) with adj(A) * A = det(A) * I.
template <CoefficientField F>
[[nodiscard]] PolyMatrix<F> classical_adjoint(const PolyMatrix<F>& a) {
  if (!a.is_square()) throw InputError("adjoint of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Polynomial<F>> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial<F> c = determinant(detail::delete_row_col(a, j, i));
      e.push_back((i + j) % 2 ? -c : c);
    }
  return PolyMatrix<F>(a.ring_ptr(), n, n, std::move(e));
}

namespace detail {
template <CoefficientField F>
void require_alternating_even(const PolyMatrix<F>& a) {
  if (a.kind() != MatrixKind::alternating) throw InputError("Pfaffian requires an alternating matrix");
  if (a.rows() % 2 != 0) throw InputError("Pfaffian requires an even-size matrix");
}

// Pfaffian of the principal submatrix on the index set `set`, expanding
// along its smallest index.
template <CoefficientField F>
Polynomial<F> pfaffian_on(const PolyMatrix<F>& a, std::uint64_t set,
                          std::unordered_map<std::uint64_t, Polynomial<F>>& memo) {
  const auto& ring = a.ring_ptr();
  if (set == 0) return Polynomial<F>::constant(ring, ring->field().one());
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  const std::size_t first = static_cast<std::size_t>(__builtin_ctzll(set));
  const std::uint64_t rest = set & ~(std::uint64_t{1} << first);
  Polynomial<F> sum(ring);
  bool negative = false;
  for (std::size_t j = first + 1; j < a.rows(); ++j) {
    if (!(rest & (std::uint64_t{1} << j))) continue;
    const auto& e = a(first, j);
    if (!e.is_zero()) {
      Polynomial<F> term = e * pfaffian_on(a, rest & ~(std::uint64_t{1} << j), memo);
      sum = negative ? sum - term : sum + term;
    }
    negative = !negative;
  }
  memo.emplace(set, sum);
  return sum;
}
}  // namespace detail

/// Pf(A) by first-row expansion; Pf of the empty matrix is 1.
template <CoefficientField F>
[[nodiscard]] Polynomial<F> pfaffian(const PolyMatrix<F>& a) {
  detail::require_alternating_even(a);
  if (a.rows() > 64) throw InputError("Pfaffian limited to 64x64");
  std::unordered_map<std::uint64_t, Polynomial<F>> memo;
  const std::uint64_t all = a.rows() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.rows()) - 1;
  return detail::pfaffian_on(a, all, memo);
}

/// Alternating matrix with (i,j) entry (-1)^(i+j) Pf(A minus rows/cols i,j)
/// for i < j; satisfies pfadj(A) * A = Pf(A) * I.
template <CoefficientField F>
[[nodiscard]] PolyMatrix<F> pfaffian_adjoint(const PolyMatrix<F>& a) {
  detail::require_alternating_even(a);
  const std::size_t n = a.rows();
  if (n > 64) throw InputError("Pfaffian limited to 64x64");
  std::unordered_map<std::uint64_t, Polynomial<F>> memo;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<Polynomial<F>> e(n * n, Polynomial<F>(a.ring_ptr()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t set = all & ~(std::uint64_t{1} << i) & ~(std::uint64_t{1} << j);
      Polynomial<F> p = detail::pfaffian_on(a, set, memo);
      // 1-based parity of i+j equals 0-based parity
      if ((i + j) % 2) p = -p;
      e[j * n + i] = -p;
      e[i * n + j] = std::move(p);
    }
  return PolyMatrix<F>(a.ring_ptr(), n, n, std::move(e), MatrixKind::alternating);
}

/// All t x t minors, row sets outer and column sets inner, both in
/// lexicographic order.
template <CoefficientField F>
[[nodiscard]] std::vector<Polynomial<F>> enumerate_minors(const PolyMatrix<F>& a, std::size_t t) {
  if (t < 1 || t > std::min(a.rows(), a.cols()))
    throw InputError("minor size " + std::to_string(t) + " out of range");
  const auto row_sets = combinations(a.rows(), t);
  const auto col_sets = combinations(a.cols(), t);
  std::vector<Polynomial<F>> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& r : row_sets)
    for (const auto& c : col_sets) {
      PolyMatrix<F> sub = a.submatrix(r, c);
      out.push_back(t == 1 ? sub(0, 0) : determinant(sub));
    }
  return out;
}

/// Pfaffians of all principal two_t x two_t submatrices, index sets in
/// lexicographic order.
template <CoefficientField F>
[[nodiscard]] std::vector<Polynomial<F>> enumerate_pfaffians(const PolyMatrix<F>& a,
                                                             std::size_t two_t) {
  if (a.kind() != MatrixKind::alternating) throw InputError("Pfaffians require an alternating matrix");
  if (two_t % 2 != 0) throw InputError("Pfaffian size must be even");
  if (two_t < 2 || two_t > a.rows())
    throw InputError("Pfaffian size " + std::to_string(two_t) + " out of range");
  std::vector<Polynomial<F>> out;
  for (const auto& s : combinations(a.rows(), two_t)) out.push_back(pfaffian(a.submatrix(s, s)));
  return out;
}

}  // namespace reesdet::matrix
