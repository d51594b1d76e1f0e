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

#include "reesdet/groebner/ideal.hpp"
#include "reesdet/poly/io.hpp"
#include "test_util.hpp"

using namespace reesdet;
using namespace reesdet::groebner;
using matrix::MatrixKind;
using matrix::generic_matrix;
using poly::PrimeField;
using poly::RationalField;
using poly::make_ring;
using poly::parse_polynomial;
using reesdet::testing::random_homogeneous;
using reesdet::testing::random_monomial;
using reesdet::testing::random_poly;

namespace {

template <class F>
std::vector<Polynomial<F>> parse_all(const RingPtr<F>& r, std::vector<std::string> texts) {
  std::vector<Polynomial<F>> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

// Largest subset of variables containing no generator's support, by
// enumerating every subset.
std::size_t brute_force_dimension(const std::vector<Monomial>& lt, std::size_t nvars) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
    bool independent = true;
    for (const auto& m : lt) {
      bool inside = true;
      for (std::size_t i = 0; i < nvars; ++i)
        if (m[i] != 0 && !(s & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<std::size_t>(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace

TEST(Buchberger, Examples) {
  auto r = make_ring<RationalField>({"x", "y"});
  EXPECT_EQ(buchberger(parse_all(r, {"x", "y"})), parse_all(r, {"y", "x"}));
  EXPECT_EQ(buchberger(parse_all(r, {"x^2 - y", "x"})), parse_all(r, {"y", "x"}));
  EXPECT_EQ(buchberger(parse_all(r, {"1"})), parse_all(r, {"1"}));
  EXPECT_EQ(buchberger(parse_all(r, {"2*x + 4", "3*x + 6"})), parse_all(r, {"x + 2"}));
  EXPECT_TRUE(buchberger(parse_all(r, {"0"})).empty());
  EXPECT_EQ(buchberger(parse_all(r, {"x", "x + 1"})), parse_all(r, {"1"}));
}

TEST(Buchberger, LexTwistedCubic) {
  auto r = make_ring<RationalField>({"t", "x", "y", "z"});
  auto gens = parse_all(r, {"x - t", "y - t^2", "z - t^3"});
  auto g = buchberger(gens, poly::MonomialOrder::lex);
  EXPECT_TRUE(verify_groebner(std::vector<Polynomial<RationalField>>{}, g).empty());
  // The elimination ideal in x, y, z is generated by y - x^2 and z - x^3.
  auto lex = g.front().ring_ptr();
  EXPECT_TRUE(normal_form(parse_polynomial("y - x^2", lex), g).is_zero());
  EXPECT_TRUE(normal_form(parse_polynomial("z - x^3", lex), g).is_zero());
}

TEST(NormalForm, Examples) {
  auto r = make_ring<RationalField>({"x", "y"});
  auto basis = parse_all(r, {"x^2 - y"});
  EXPECT_EQ(normal_form(parse_polynomial("x^2*y", r), basis), parse_polynomial("y^2", r));
  EXPECT_EQ(normal_form(parse_polynomial("y", r), parse_all(r, {"x"})), parse_polynomial("y", r));
  EXPECT_TRUE(normal_form(parse_polynomial("x^3 - x*y", r), basis).is_zero());
}

template <class F>
class BuchbergerRandom : public ::testing::Test {};
using Fields = ::testing::Types<PrimeField, RationalField>;
TYPED_TEST_SUITE(BuchbergerRandom, Fields);

TYPED_TEST(BuchbergerRandom, SPolynomialsVanish) {
  using F = TypeParam;
  auto r = make_ring<F>({"a", "b", "c", "d"});
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<Polynomial<F>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_homogeneous(r, 2, rng));
    auto g = buchberger(gens);
    ASSERT_EQ(verify_groebner(gens, g), "");
    for (std::size_t i = 0; i < g.size(); ++i) {
      ASSERT_TRUE(r->field().is_one(g[i].leading_coeff()));
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j) {
          for (const auto& t : g[j].terms()) ASSERT_FALSE(g[i].leading_monomial().divides(t.monomial));
        }
    }
  }
}

TYPED_TEST(BuchbergerRandom, InhomogeneousInputs) {
  using F = TypeParam;
  auto r = make_ring<F>({"a", "b", "c"});
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<Polynomial<F>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, rng, 3, 2));
    auto g = buchberger(gens);
    ASSERT_EQ(verify_groebner(gens, g), "");
  }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(monomial_ideal_dimension({}, 3), 3u);
  std::vector<Monomial> vars;
  for (std::size_t i = 0; i < 4; ++i) vars.push_back(Monomial::variable(4, i));
  EXPECT_EQ(monomial_ideal_dimension(vars, 4), 0u);
  EXPECT_EQ(monomial_ideal_dimension({Monomial(std::vector<Monomial::Exponent>{1, 1})}, 2), 1u);
  EXPECT_EQ(monomial_ideal_dimension({Monomial(2)}, 2), 0u);
}

TEST(Dimension, BruteForceAgreement) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t nvars = 1 + rep % 8;
    std::vector<Monomial> lt;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      auto m = random_monomial(nvars, 1, rng);
      if (m.is_one()) continue;
      lt.push_back(m);
    }
    ASSERT_EQ(monomial_ideal_dimension(lt, nvars), brute_force_dimension(lt, nvars));
  }
}

TEST(Height, Conventions) {
  auto r = make_ring<PrimeField>({"x", "y"});
  EXPECT_EQ(IdealHandle<PrimeField>::unit(r).height(), ExtendedHeight::infinity());
  EXPECT_EQ(IdealHandle<PrimeField>::zero(r).height(), ExtendedHeight(0));
  EXPECT_EQ(IdealHandle<PrimeField>(r, parse_all(r, {"x", "y"})).height(), ExtendedHeight(2));
  EXPECT_EQ(IdealHandle<PrimeField>(r, parse_all(r, {"x*y"})).height(), ExtendedHeight(1));
  EXPECT_EQ(IdealHandle<PrimeField>(r, parse_all(r, {"x + 1", "x"})).height(), ExtendedHeight::infinity());
}

TEST(Height, InvariantUnderPermutationAndScaling) {
  auto g = generic_matrix<PrimeField>(2, 4, MatrixKind::ordinary);
  auto minors = matrix::enumerate_minors(g, 2);
  auto base = IdealHandle<PrimeField>(g.ring_ptr(), minors).height();
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 5; ++rep) {
    auto perm = minors;
    std::shuffle(perm.begin(), perm.end(), rng);
    perm[0] = perm[0].scaled(g.ring().field().from_int(7 + rep));
    EXPECT_EQ(IdealHandle<PrimeField>(g.ring_ptr(), perm).height(), base);
  }
}

TEST(Height, IdealConventions) {
  auto g = generic_matrix<PrimeField>(2, 3, MatrixKind::ordinary);
  EXPECT_EQ(ideal_of_minors(g, 0).height(), ExtendedHeight::infinity());
  EXPECT_EQ(ideal_of_minors(g, 3).height(), ExtendedHeight(0));
  EXPECT_EQ(ideal_of_minors(g, 2).generators().size(), 3u);
  auto a = generic_matrix<PrimeField>(5, 5, MatrixKind::alternating);
  EXPECT_EQ(ideal_of_pfaffians(a, 0).height(), ExtendedHeight::infinity());
  EXPECT_EQ(ideal_of_pfaffians(a, 6).height(), ExtendedHeight(0));
  auto pf4 = ideal_of_pfaffians(a, 4);
  EXPECT_EQ(pf4.generators().size(), 5u);
  EXPECT_EQ(pf4.height(), ExtendedHeight(3));
  EXPECT_THROW((void)ideal_of_pfaffians(a, 3), InputError);
  EXPECT_THROW((void)ideal_of_pfaffians(g, 2), InputError);
}

TEST(Height, SharedCacheAcrossCopies) {
  auto g = generic_matrix<PrimeField>(2, 3, MatrixKind::ordinary);
  auto i = ideal_of_minors(g, 2);
  auto copy = i;
  EXPECT_EQ(i.height(), ExtendedHeight(2));
  EXPECT_EQ(&copy.groebner_basis(), &i.groebner_basis());
}

TEST(Height, Timeout) {
  auto g = generic_matrix<PrimeField>(4, 4, MatrixKind::ordinary);
  auto i = ideal_of_minors(g, 2);
  EXPECT_THROW((void)i.height(Deadline::after(0.0)), TimeoutError);
}

struct GridCase {
  MatrixKind kind;
  std::size_t m, n;
  long t;  // half-size for alternating
  std::int64_t height;
};

class GenericHeightGrid : public ::testing::TestWithParam<GridCase> {};

TEST_P(GenericHeightGrid, MatchesFormula) {
  const auto c = GetParam();
  auto g = generic_matrix<PrimeField>(c.m, c.n, c.kind);
  auto rep = is_generic_height(g, c.t);
  EXPECT_EQ(rep.expected, c.height);
  EXPECT_EQ(rep.actual, ExtendedHeight(static_cast<std::uint64_t>(c.height)));
  EXPECT_TRUE(rep.generic);
}

INSTANTIATE_TEST_SUITE_P(
    Grid, GenericHeightGrid,
    ::testing::Values(GridCase{MatrixKind::ordinary, 2, 2, 1, 4}, GridCase{MatrixKind::ordinary, 2, 3, 2, 2},
                      GridCase{MatrixKind::ordinary, 3, 3, 2, 4}, GridCase{MatrixKind::ordinary, 3, 3, 3, 1},
                      GridCase{MatrixKind::ordinary, 2, 4, 2, 3}, GridCase{MatrixKind::symmetric, 3, 3, 2, 3},
                      GridCase{MatrixKind::symmetric, 3, 3, 3, 1}, GridCase{MatrixKind::symmetric, 4, 4, 3, 3},
                      GridCase{MatrixKind::alternating, 4, 4, 2, 1},
                      GridCase{MatrixKind::alternating, 5, 5, 2, 3},
                      GridCase{MatrixKind::alternating, 6, 6, 2, 6}));

TEST(GenericHeight, RationalsAgree) {
  auto g = generic_matrix<RationalField>(3, 3, MatrixKind::symmetric);
  EXPECT_EQ(is_generic_height(g, 2).actual, ExtendedHeight(3));
}

TEST(GenericHeight, RangeErrors) {
  auto g = generic_matrix<PrimeField>(2, 3, MatrixKind::ordinary);
  EXPECT_THROW((void)is_generic_height(g, 3), InputError);
  auto a = generic_matrix<PrimeField>(5, 5, MatrixKind::alternating);
  EXPECT_THROW((void)is_generic_height(a, 3), InputError);
}

TEST(GenericHeight, SpecializedMatrixFallsShort) {
  auto r = make_ring<PrimeField>({"x", "y"});
  std::vector<Polynomial<PrimeField>> e = {parse_polynomial("x", r), parse_polynomial("y", r),
                                           parse_polynomial("x", r), parse_polynomial("y", r)};
  matrix::PolyMatrix<PrimeField> m(r, 2, 2, e);
  auto rep = is_generic_height(m, 1);
  EXPECT_FALSE(rep.generic);
  EXPECT_EQ(rep.actual, ExtendedHeight(2));
  EXPECT_EQ(rep.expected, 4);
}
