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

#include "reesdet/gs/gs.hpp"
#include "reesdet/matrix/determinant.hpp"
#include "reesdet/poly/io.hpp"

using namespace reesdet;
using gs::check_Gs;
using gs::gs_threshold;
using gs::max_Gs_generic;
using gs::min_gens_generic;
using matrix::generic_matrix;
using poly::PrimeField;

namespace {

const ExtendedNat inf = ExtendedNat::infinity();

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Largest s with G_s, from the height conditions evaluated on the generic
// height formulas: min of ht I_j over the j whose threshold is not met.
ExtendedNat oracle_max_s(const ProblemInstance& p) {
  ExtendedNat best = inf;
  for (std::int64_t j = 1; j < p.t; ++j) {
    std::int64_t h = 0, theta = 0;
    switch (p.kind) {
      case MatrixKind::ordinary:
        h = (p.m - j + 1) * (p.n - j + 1);
        theta = binom(p.m - j + 1, p.m - p.t) * binom(p.n - j + 1, p.n - p.t);
        break;
      case MatrixKind::symmetric: {
        h = binom(p.n - j + 2, 2);
        const auto num = binom(p.n - j + 2, p.n - p.t) * binom(p.n - j + 2, p.n - p.t + 1);
        theta = num / (p.n - j + 2);
        break;
      }
      case MatrixKind::alternating:
        h = binom(p.n - 2 * j + 2, 2);
        theta = binom(p.n - 2 * j + 2, p.n - 2 * p.t);
        break;
    }
    if (h < theta) best = min(best, ExtendedNat(static_cast<std::uint64_t>(h)));
  }
  return best;
}

}  // namespace

TEST(GsThreshold, Examples) {
  EXPECT_EQ(gs_threshold(ProblemInstance::ordinary(2, 3, 2), 1), 3);
  EXPECT_EQ(gs_threshold(ProblemInstance::symmetric(3, 2), 1), 6);
  EXPECT_EQ(gs_threshold(ProblemInstance::alternating(5, 2), 1), 5);
  EXPECT_THROW((void)gs_threshold(ProblemInstance::ordinary(2, 3, 2), 2), InputError);
  EXPECT_THROW((void)gs_threshold(ProblemInstance::ordinary(2, 3, 2), 0), InputError);
}

TEST(GsThreshold, PositiveAndIntegral) {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t t = 1; t <= n; ++t)
      for (std::int64_t j = 1; j < t; ++j) {
        ASSERT_GT(gs_threshold(ProblemInstance::symmetric(n, t), j), 0);
        for (std::int64_t m = t; m <= n; ++m)
          ASSERT_GT(gs_threshold(ProblemInstance::ordinary(m, n, t), j), 0);
        if (2 * t <= n) {
          ASSERT_GT(gs_threshold(ProblemInstance::alternating(n, t), j), 0);
        }
      }
}

TEST(MaxGsGeneric, Examples) {
  EXPECT_EQ(max_Gs_generic(ProblemInstance::ordinary(2, 5, 2)), inf);
  EXPECT_EQ(max_Gs_generic(ProblemInstance::ordinary(3, 6, 3)), ExtendedNat(18));
  EXPECT_EQ(max_Gs_generic(ProblemInstance::ordinary(4, 7, 4)), ExtendedNat(18));
  EXPECT_EQ(max_Gs_generic(ProblemInstance::ordinary(2, 6, 2)), ExtendedNat(12));
  EXPECT_EQ(max_Gs_generic(ProblemInstance::ordinary(2, 3, 2)), inf);
  EXPECT_EQ(max_Gs_generic(ProblemInstance::alternating(8, 2)), ExtendedNat(28));
  EXPECT_EQ(max_Gs_generic(ProblemInstance::symmetric(4, 3)), inf);
  EXPECT_EQ(max_Gs_generic(ProblemInstance::symmetric(5, 2)), ExtendedNat(15));
}

TEST(MaxGsGeneric, AgreesWithThresholdOracle) {
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t t = 1; t <= n; ++t) {
      for (std::int64_t m = t; m <= n; ++m) {
        const auto p = ProblemInstance::ordinary(m, n, t);
        ASSERT_EQ(max_Gs_generic(p), oracle_max_s(p)) << p.describe();
      }
      const auto s = ProblemInstance::symmetric(n, t);
      ASSERT_EQ(max_Gs_generic(s), oracle_max_s(s)) << s.describe();
      if (2 * t <= n) {
        const auto a = ProblemInstance::alternating(n, t);
        ASSERT_EQ(max_Gs_generic(a), oracle_max_s(a)) << a.describe();
      }
    }
}

TEST(MinGensGeneric, Examples) {
  EXPECT_EQ(min_gens_generic(ProblemInstance::ordinary(2, 3, 2)), 3);
  EXPECT_EQ(min_gens_generic(ProblemInstance::symmetric(3, 2)), 6);
  EXPECT_EQ(min_gens_generic(ProblemInstance::alternating(6, 2)), 15);
  EXPECT_THROW((void)min_gens_generic(ProblemInstance::ordinary(3, 2, 1)), InputError);
}

TEST(MinGensGeneric, MatchesEnumeration) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= n; ++m) {
      const auto g = generic_matrix<PrimeField>(m, n, MatrixKind::ordinary);
      for (std::size_t t = 1; t <= m; ++t)
        ASSERT_EQ(static_cast<std::size_t>(min_gens_generic(ProblemInstance::ordinary(m, n, t))),
                  matrix::enumerate_minors(g, t).size());
    }
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto a = generic_matrix<PrimeField>(n, n, MatrixKind::alternating);
    for (std::size_t t = 1; 2 * t <= n; ++t)
      ASSERT_EQ(static_cast<std::size_t>(min_gens_generic(ProblemInstance::alternating(n, t))),
                matrix::enumerate_pfaffians(a, 2 * t).size());
  }
}

TEST(CheckGs, Generic2x3) {
  const auto g = generic_matrix<PrimeField>(2, 3, MatrixKind::ordinary);
  const auto r = check_Gs(g, 2, inf);
  EXPECT_TRUE(r.generic_height_ok);
  EXPECT_TRUE(r.satisfied);
  ASSERT_EQ(r.per_j.size(), 1u);
  EXPECT_EQ(r.per_j[0].threshold, 3);
  EXPECT_EQ(r.per_j[0].actual, ExtendedNat(6));
  EXPECT_EQ(r.max_s, inf);
}

TEST(CheckGs, Generic2x6) {
  const auto g = generic_matrix<PrimeField>(2, 6, MatrixKind::ordinary);
  const auto r = check_Gs(g, 2, inf);
  EXPECT_FALSE(r.satisfied);
  EXPECT_EQ(r.max_s, ExtendedNat(12));
  EXPECT_TRUE(check_Gs(g, 2, ExtendedNat(12)).satisfied);
  EXPECT_FALSE(check_Gs(g, 2, ExtendedNat(13)).satisfied);
}

TEST(CheckGs, SymmetricSubmaximal) {
  const auto g = generic_matrix<PrimeField>(4, 4, MatrixKind::symmetric);
  EXPECT_EQ(check_Gs(g, 3, inf).max_s, inf);
}

TEST(CheckGs, SEqualsOneAlwaysHolds) {
  for (auto [m, n, t] : {std::tuple{2, 3, 2}, std::tuple{2, 6, 2}, std::tuple{3, 3, 2}}) {
    const auto g = generic_matrix<PrimeField>(m, n, MatrixKind::ordinary);
    EXPECT_TRUE(check_Gs(g, t, ExtendedNat(1)).satisfied);
  }
}

TEST(CheckGs, Preconditions) {
  auto r = poly::make_ring<PrimeField>({"x", "y"});
  std::vector<poly::Polynomial<PrimeField>> e;
  for (const char* s : {"x", "y", "x", "y"}) e.push_back(poly::parse_polynomial(s, r));
  const matrix::PolyMatrix<PrimeField> a(r, 2, 2, e);
  EXPECT_THROW((void)check_Gs(a, 2, inf), PreconditionError);
  const auto g = generic_matrix<PrimeField>(2, 3, MatrixKind::ordinary);
  EXPECT_THROW((void)check_Gs(g, 3, inf), InputError);
  EXPECT_THROW((void)check_Gs(g, 2, ExtendedNat(0)), InputError);
}

struct CrossCase {
  MatrixKind kind;
  std::size_t m, n;
  std::int64_t t;
};

class GsCrossOracle : public ::testing::TestWithParam<CrossCase> {};

TEST_P(GsCrossOracle, HeightsMatchClosedForm) {
  const auto c = GetParam();
  const auto g = generic_matrix<PrimeField>(c.m, c.n, c.kind);
  const ProblemInstance p{c.kind, static_cast<std::int64_t>(c.m), static_cast<std::int64_t>(c.n), c.t};
  EXPECT_EQ(check_Gs(g, c.t, inf).max_s, max_Gs_generic(p));
}

INSTANTIATE_TEST_SUITE_P(
    Grid, GsCrossOracle,
    ::testing::Values(CrossCase{MatrixKind::ordinary, 2, 3, 2}, CrossCase{MatrixKind::ordinary, 2, 5, 2},
                      CrossCase{MatrixKind::ordinary, 2, 6, 2}, CrossCase{MatrixKind::ordinary, 3, 3, 2},
                      CrossCase{MatrixKind::symmetric, 3, 3, 2}, CrossCase{MatrixKind::symmetric, 4, 4, 3},
                      CrossCase{MatrixKind::alternating, 5, 5, 2},
                      CrossCase{MatrixKind::alternating, 6, 6, 2}));
