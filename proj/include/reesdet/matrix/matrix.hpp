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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "reesdet/errors.hpp"
#include "reesdet/poly/polynomial.hpp"

namespace reesdet::matrix {

using poly::CoefficientField;
using poly::Polynomial;
using poly::RingPtr;

enum class MatrixKind { ordinary, symmetric, alternating };

[[nodiscard]] inline std::string_view to_string(MatrixKind k) noexcept {
  switch (k) {
    case MatrixKind::ordinary: return "ordinary";
    case MatrixKind::symmetric: return "symmetric";
    case MatrixKind::alternating: return "alternating";
  }
  return "ordinary";
}

[[nodiscard]] inline MatrixKind parse_matrix_kind(std::string_view text) {
  if (text == "ordinary") return MatrixKind::ordinary;
  if (text == "symmetric") return MatrixKind::symmetric;
  if (text == "alternating") return MatrixKind::alternating;
  throw InputError("unknown matrix kind '" + std::string(text) + "'");
}

/// Row-major matrix of polynomials over one ring, with a validated kind and
/// the common entry degree when there is one.
template <CoefficientField F>
class PolyMatrix {
 public:
  using Poly = Polynomial<F>;

  PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries,
             MatrixKind kind = MatrixKind::ordinary)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), kind_(kind), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw InputError("matrix entry count does not match shape");
    for (const auto& e : entries_)
      if (!(e.ring() == *ring_)) throw InputError("matrix entries belong to different rings");
    validate_kind();
    delta_ = compute_delta();
  }

  [[nodiscard]] static PolyMatrix zero(RingPtr<F> ring, std::size_t rows, std::size_t cols) {
    std::vector<Poly> e(rows * cols, Poly(ring));
    return PolyMatrix(std::move(ring), rows, cols, std::move(e));
  }

  [[nodiscard]] static PolyMatrix identity(RingPtr<F> ring, std::size_t n) {
    std::vector<Poly> e(n * n, Poly(ring));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Poly::constant(ring, ring->field().one());
    return PolyMatrix(std::move(ring), n, n, std::move(e), MatrixKind::symmetric);
  }

  [[nodiscard]] const RingPtr<F>& ring_ptr() const noexcept { return ring_; }
  [[nodiscard]] const poly::Ring<F>& ring() const noexcept { return *ring_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] MatrixKind kind() const noexcept { return kind_; }
  /// Common homogeneous degree of all entries; absent when entries are
  /// non-homogeneous, of different degrees, or all zero.
  [[nodiscard]] std::optional<unsigned> entry_degree() const noexcept { return delta_; }

  [[nodiscard]] const Poly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  [[nodiscard]] const Poly& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
    return entries_[i * cols_ + j];
  }
  [[nodiscard]] const std::vector<Poly>& entries() const noexcept { return entries_; }

  /// Submatrix on the given rows and columns; principal selections keep the
  /// kind, others are ordinary.
  [[nodiscard]] PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
    std::vector<Poly> e;
    e.reserve(rows.size() * cols.size());
    for (auto i : rows)
      for (auto j : cols) e.push_back(at(i, j));
    const MatrixKind k = rows == cols ? kind_ : MatrixKind::ordinary;
    return PolyMatrix(ring_, rows.size(), cols.size(), std::move(e), k);
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void validate_kind() const {
    if (kind_ == MatrixKind::ordinary) return;
    if (rows_ != cols_) throw InputError(std::string(to_string(kind_)) + " matrix must be square");
    for (std::size_t i = 0; i < rows_; ++i) {
      if (kind_ == MatrixKind::alternating && !(*this)(i, i).is_zero())
        throw InputError("alternating matrix has a nonzero diagonal entry at (" +
                         std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
      for (std::size_t j = i + 1; j < cols_; ++j) {
        const bool ok = kind_ == MatrixKind::symmetric ? (*this)(i, j) == (*this)(j, i)
                                                       : (*this)(i, j) == -(*this)(j, i);
        if (!ok)
          throw InputError(std::string(to_string(kind_)) + " matrix condition fails at (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }

  std::optional<unsigned> compute_delta() const {
    std::optional<unsigned> d;
    for (const auto& e : entries_) {
      const auto h = e.homogeneous_degree();
      if (!h.homogeneous()) return std::nullopt;
      if (auto v = h.value()) {
        if (d && *d != *v) return std::nullopt;
        d = v;
      }
    }
    return d;
  }

  RingPtr<F> ring_;
  std::size_t rows_;
  std::size_t cols_;
  MatrixKind kind_;
  std::vector<Poly> entries_;
  std::optional<unsigned> delta_;
};

template <CoefficientField F>
[[nodiscard]] PolyMatrix<F> transpose(const PolyMatrix<F>& a) {
  std::vector<Polynomial<F>> e;
  e.reserve(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) e.push_back(a(i, j));
  return PolyMatrix<F>(a.ring_ptr(), a.cols(), a.rows(), std::move(e));
}

template <CoefficientField F>
[[nodiscard]] PolyMatrix<F> multiply(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  std::vector<Polynomial<F>> e;
  e.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial<F> s(a.ring_ptr());
      for (std::size_t l = 0; l < a.cols(); ++l) s += a(i, l) * b(l, j);
      e.push_back(std::move(s));
    }
  return PolyMatrix<F>(a.ring_ptr(), a.rows(), b.cols(), std::move(e));
}

template <CoefficientField F>
[[nodiscard]] PolyMatrix<F> scalar_identity(const Polynomial<F>& c, std::size_t n) {
  std::vector<Polynomial<F>> e(n * n, Polynomial<F>(c.ring_ptr()));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = c;
  return PolyMatrix<F>(c.ring_ptr(), n, n, std::move(e));
}

/// Number of fresh variables a generic matrix of this shape uses.
[[nodiscard]] inline std::size_t generic_variable_count(std::size_t m, std::size_t n,
                                                        MatrixKind kind) {
  switch (kind) {
    case MatrixKind::ordinary: return m * n;
    case MatrixKind::symmetric: return n * (n + 1) / 2;
    case MatrixKind::alternating: return n * (n - 1) / 2;
  }
  return 0;
}

/// Matrix whose independent entries are fresh variables x_i_j (1-based),
/// appended after `base_vars`. The prefix is lengthened if it would clash
/// with a base variable.
template <CoefficientField F>
[[nodiscard]] PolyMatrix<F> generic_matrix(std::size_t m, std::size_t n, MatrixKind kind,
                                           std::vector<std::string> base_vars = {},
                                           F field = F{},
                                           poly::MonomialOrder order = poly::MonomialOrder::grevlex) {
  if (m == 0 || n == 0) throw InputError("matrix dimensions must be positive");
  if (kind != MatrixKind::ordinary && m != n)
    throw InputError(std::string(to_string(kind)) + " matrix must be square");

  auto independent = [&](std::size_t i, std::size_t j) {
    switch (kind) {
      case MatrixKind::ordinary: return true;
      case MatrixKind::symmetric: return i <= j;
      case MatrixKind::alternating: return i < j;
    }
    return true;
  };
  const std::unordered_set<std::string> taken(base_vars.begin(), base_vars.end());
  std::string prefix = "x";
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t i = 0; i < m && !clash; ++i)
      for (std::size_t j = 0; j < n && !clash; ++j)
        if (independent(i, j) &&
            taken.count(prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)))
          clash = true;
    if (clash) prefix += "x";
  }

  std::vector<std::string> vars = std::move(base_vars);
  std::vector<std::size_t> index(m * n, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (independent(i, j)) {
        index[i * n + j] = vars.size();
        vars.push_back(prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
  auto ring = poly::make_ring<F>(std::move(vars), std::move(field), order);

  std::vector<Polynomial<F>> e;
  e.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (independent(i, j)) {
        e.push_back(Polynomial<F>::variable(ring, index[i * n + j]));
      } else if (kind == MatrixKind::symmetric) {
        e.push_back(Polynomial<F>::variable(ring, index[j * n + i]));
      } else if (i == j) {
        e.emplace_back(ring);
      } else {
        e.push_back(-Polynomial<F>::variable(ring, index[j * n + i]));
      }
    }
  return PolyMatrix<F>(ring, m, n, std::move(e), kind);
}

}  // namespace reesdet::matrix
