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

#include <gtest/gtest.h>

#include <random>

#include "reesdet/combinatorics.hpp"
#include "reesdet/matrix/determinant.hpp"
#include "reesdet/poly/io.hpp"
#include "test_util.hpp"

using namespace reesdet;
using namespace reesdet::matrix;
using poly::PrimeField;
using poly::RationalField;
using poly::make_ring;
using poly::parse_polynomial;
using reesdet::testing::random_alternating;
using reesdet::testing::random_square;
using reesdet::testing::var_names;

namespace {

template <class F>
PolyMatrix<F> from_text(const poly::RingPtr<F>& r, std::size_t m, std::size_t n,
                        std::vector<std::string> cells, MatrixKind kind = MatrixKind::ordinary) {
  std::vector<Polynomial<F>> e;
  for (const auto& c : cells) e.push_back(parse_polynomial(c, r));
  return PolyMatrix<F>(r, m, n, std::move(e), kind);
}

}  // namespace

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(combinations(4, 2).size(), 6u);
  EXPECT_EQ(combinations(4, 2)[1], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(combinations(3, 0).size(), 1u);
}

TEST(Matrix, GenericVariableCounts) {
  EXPECT_EQ(generic_matrix<PrimeField>(2, 2, MatrixKind::ordinary).ring().nvars(), 4u);
  auto s = generic_matrix<PrimeField>(3, 3, MatrixKind::symmetric);
  EXPECT_EQ(s.ring().nvars(), 6u);
  EXPECT_EQ(s(0, 2), s(2, 0));
  auto a = generic_matrix<PrimeField>(4, 4, MatrixKind::alternating);
  EXPECT_EQ(a.ring().nvars(), 6u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(a(i, i).is_zero());
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(a(i, j), -a(j, i));
  }
  EXPECT_EQ(a.entry_degree(), 1u);
  EXPECT_THROW((void)generic_matrix<PrimeField>(2, 3, MatrixKind::symmetric), InputError);
}

TEST(Matrix, GenericAvoidsNameClash) {
  auto g = generic_matrix<PrimeField>(1, 2, MatrixKind::ordinary, {"x_1_1"});
  EXPECT_EQ(g.ring().nvars(), 3u);
  EXPECT_EQ(g.ring().variables()[1], "xx_1_1");
}

TEST(Matrix, KindValidation) {
  auto r = make_ring<RationalField>({"a", "b"});
  EXPECT_THROW(from_text(r, 2, 2, {"a", "b", "a", "a"}, MatrixKind::symmetric), InputError);
  EXPECT_THROW(from_text(r, 2, 2, {"0", "a", "a", "0"}, MatrixKind::alternating), InputError);
  EXPECT_THROW(from_text(r, 2, 2, {"b", "a", "-a", "0"}, MatrixKind::alternating), InputError);
  EXPECT_NO_THROW(from_text(r, 2, 2, {"0", "a", "-a", "0"}, MatrixKind::alternating));
  EXPECT_FALSE(from_text(r, 1, 2, {"a", "b^2"}).entry_degree().has_value());
  EXPECT_EQ(from_text(r, 1, 2, {"a^2", "0"}).entry_degree(), 2u);
}

TEST(Determinant, SmallCases) {
  auto r = make_ring<RationalField>({"a", "b", "c", "d"});
  EXPECT_EQ(determinant(PolyMatrix<RationalField>::identity(r, 3)), Polynomial<RationalField>::constant(r, std::int64_t{1}));
  auto m = from_text(r, 2, 2, {"a", "b", "c", "d"});
  EXPECT_EQ(determinant(m), parse_polynomial("a*d - b*c", r));
  EXPECT_EQ(determinant_bareiss(m), parse_polynomial("a*d - b*c", r));
  EXPECT_EQ(classical_adjoint(m), from_text(r, 2, 2, {"d", "-b", "-c", "a"}));
  EXPECT_EQ(classical_adjoint(PolyMatrix<RationalField>::identity(r, 3)),
            PolyMatrix<RationalField>::identity(r, 3));
  EXPECT_THROW((void)determinant(from_text(r, 1, 2, {"a", "b"})), InputError);
}

TEST(Determinant, BareissMatchesCofactor) {
  auto r = make_ring<PrimeField>(var_names(4));
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      auto m = random_square(r, n, rng);
      ASSERT_EQ(determinant_bareiss(m), determinant_cofactor(m));
    }
}

TEST(Determinant, TransposeAndRepeatedRows) {
  auto r = make_ring<PrimeField>(var_names(3));
  std::mt19937_64 rng(10);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      auto m = random_square(r, n, rng);
      ASSERT_EQ(determinant(transpose(m)), determinant(m));
      if (n < 2) continue;
      std::vector<Polynomial<PrimeField>> e = m.entries();
      for (std::size_t j = 0; j < n; ++j) e[n + j] = e[j];
      ASSERT_TRUE(determinant(PolyMatrix<PrimeField>(r, n, n, e)).is_zero());
    }
}

TEST(Determinant, AdjointIdentity) {
  auto r = make_ring<PrimeField>(var_names(3));
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto m = random_square(r, n, rng);
    EXPECT_EQ(multiply(classical_adjoint(m), m), scalar_identity(determinant(m), n));
  }
  auto g = generic_matrix<PrimeField>(4, 4, MatrixKind::ordinary);
  EXPECT_EQ(multiply(classical_adjoint(g), g), scalar_identity(determinant(g), 4));
}

TEST(Pfaffian, Examples) {
  auto r = make_ring<RationalField>({"a"});
  auto m = from_text(r, 2, 2, {"0", "a", "-a", "0"}, MatrixKind::alternating);
  EXPECT_EQ(pfaffian(m), parse_polynomial("a", r));
  EXPECT_EQ(pfaffian_adjoint(m), from_text(r, 2, 2, {"0", "-1", "1", "0"}, MatrixKind::alternating));
  auto empty = PolyMatrix<RationalField>(r, 0, 0, {}, MatrixKind::alternating);
  EXPECT_EQ(pfaffian(empty), Polynomial<RationalField>::constant(r, std::int64_t{1}));

  auto g = generic_matrix<RationalField>(4, 4, MatrixKind::alternating);
  auto pf = pfaffian(g);
  EXPECT_EQ(poly::to_string(pf), "x_1_4*x_2_3 - x_1_3*x_2_4 + x_1_2*x_3_4");
  EXPECT_EQ(pf * pf, determinant(g));
  EXPECT_THROW((void)pfaffian(generic_matrix<RationalField>(3, 3, MatrixKind::alternating)), InputError);
  EXPECT_THROW((void)pfaffian(generic_matrix<RationalField>(2, 2, MatrixKind::ordinary)), InputError);
}

TEST(Pfaffian, SquareIsDeterminant) {
  auto r = make_ring<PrimeField>(var_names(3));
  std::mt19937_64 rng(13);
  for (std::size_t n : {2u, 4u, 6u}) {
    for (int rep = 0; rep < 5; ++rep) {
      auto m = random_alternating(r, n, rng);
      auto pf = pfaffian(m);
      ASSERT_EQ(pf * pf, determinant(m));
      ASSERT_EQ(multiply(pfaffian_adjoint(m), m), scalar_identity(pf, n));
    }
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_minors(generic_matrix<PrimeField>(2, 3, MatrixKind::ordinary), 2).size(), 3u);
  EXPECT_EQ(enumerate_minors(generic_matrix<PrimeField>(3, 3, MatrixKind::ordinary), 2).size(), 9u);
  auto g = generic_matrix<PrimeField>(2, 3, MatrixKind::ordinary);
  auto ones = enumerate_minors(g, 1);
  ASSERT_EQ(ones.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(ones[i], g.entries()[i]);
  EXPECT_EQ(enumerate_pfaffians(generic_matrix<PrimeField>(6, 6, MatrixKind::alternating), 4).size(), 15u);
  EXPECT_EQ(enumerate_pfaffians(generic_matrix<PrimeField>(4, 4, MatrixKind::alternating), 4).size(), 1u);
  EXPECT_EQ(enumerate_pfaffians(generic_matrix<PrimeField>(5, 5, MatrixKind::alternating), 4).size(), 5u);
  EXPECT_THROW((void)enumerate_minors(g, 3), InputError);
  EXPECT_THROW((void)enumerate_pfaffians(generic_matrix<PrimeField>(5, 5, MatrixKind::alternating), 3),
               InputError);
}
