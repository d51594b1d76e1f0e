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
#include <cstddef>
#include <string>
#include <vector>

#include "reesdet/deadline.hpp"
#include "reesdet/errors.hpp"
#include "reesdet/poly/polynomial.hpp"

namespace reesdet::groebner {

using poly::CoefficientField;
using poly::Monomial;
using poly::MonomialOrder;
using poly::Polynomial;
using poly::RingPtr;

namespace detail {

template <CoefficientField F>
const Polynomial<F>* find_reducer(const Monomial& m, const std::vector<Polynomial<F>>& basis,
                                  const std::vector<bool>* active = nullptr) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (active && !(*active)[i]) continue;
    if (basis[i].leading_monomial().divides(m)) return &basis[i];
  }
  return nullptr;
}

/// Reduces the leading term until it is not divisible by any active basis
/// element; the tail is left alone.
template <CoefficientField F>
Polynomial<F> top_reduce(Polynomial<F> p, const std::vector<Polynomial<F>>& basis,
                         const std::vector<bool>& active, const Deadline& deadline) {
  const F& f = p.field();
  std::size_t steps = 0;
  while (!p.is_zero()) {
    const auto* g = find_reducer(p.leading_monomial(), basis, &active);
    if (g == nullptr) break;
    if ((++steps & 63u) == 0) deadline.check();
    const auto c = f.mul(p.leading_coeff(), f.inv(g->leading_coeff()));
    p = p.minus_term_times(c, quotient(p.leading_monomial(), g->leading_monomial()), *g);
  }
  return p;
}

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& f = a.field();
  const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  Polynomial<F> sa = Polynomial<F>::monomial(
      a.ring_ptr(), quotient(l, a.leading_monomial()), f.inv(a.leading_coeff()));
  Polynomial<F> sa_a = sa * a;
  const auto cb = f.inv(b.leading_coeff());
  return sa_a.minus_term_times(cb, quotient(l, b.leading_monomial()), b);
}

}  // namespace detail

/// Remainder of p on division by `basis`: no term of the result is
/// divisible by a leading monomial of the basis.
template <CoefficientField F>
[[nodiscard]] Polynomial<F> normal_form(const Polynomial<F>& p,
                                        const std::vector<Polynomial<F>>& basis,
                                        const Deadline& deadline = {}) {
  const F& f = p.field();
  Polynomial<F> rest = p;
  std::vector<typename Polynomial<F>::Term> done;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if ((++steps & 63u) == 0) deadline.check();
    const auto& lt = rest.leading_term();
    const auto* g = detail::find_reducer(lt.monomial, basis);
    if (g == nullptr) {
      done.push_back(lt);
      rest = rest.tail();
      continue;
    }
    rest.check_same_ring(*g);
    const auto c = f.mul(lt.coeff, f.inv(g->leading_coeff()));
    rest = rest.minus_term_times(c, quotient(lt.monomial, g->leading_monomial()), *g);
  }
  return Polynomial<F>::from_terms(p.ring_ptr(), std::move(done));
}

/// Checks that `basis` is a Groebner basis of the ideal generated by
/// `gens`: every S-polynomial and every generator reduces to zero. Returns
/// a description of the first failure, or an empty string.
template <CoefficientField F>
[[nodiscard]] std::string verify_groebner(const std::vector<Polynomial<F>>& gens,
                                          const std::vector<Polynomial<F>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(detail::s_polynomial(basis[i], basis[j]), basis).is_zero())
        return "S-polynomial of basis elements " + std::to_string(i) + " and " +
               std::to_string(j) + " does not reduce to zero";
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!normal_form(gens[i], basis).is_zero())
      return "generator " + std::to_string(i) + " does not reduce to zero";
  return {};
}

/// Reduced Groebner basis with respect to the order of the generators'
/// ring, sorted by increasing leading monomial. Uses the Gebauer-Moeller
/// pair criteria and sugar-degree selection.
template <CoefficientField F>
[[nodiscard]] std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& gens,
                                                    const Deadline& deadline = {}) {
  using Poly = Polynomial<F>;
  for (std::size_t i = 1; i < gens.size(); ++i) gens[0].check_same_ring(gens[i]);
  if (gens.empty()) return {};
  const RingPtr<F> ring = gens.front().ring_ptr();
  const MonomialOrder order = ring->order();

  std::vector<Poly> basis;
  std::vector<unsigned> sugar;
  std::vector<bool> active;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };
  std::vector<Pair> pairs;

  auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
    return std::max(sugar[i] + l.degree() - basis[i].leading_monomial().degree(),
                    sugar[j] + l.degree() - basis[j].leading_monomial().degree());
  };

  auto insert = [&](Poly h, unsigned h_sugar) {
    const std::size_t hi = basis.size();
    basis.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(true);
    const Monomial& lh = basis[hi].leading_monomial();

    // Candidate pairs (g, h), pruned by the chain criterion among themselves.
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) {
        Monomial l = lcm(basis[g].leading_monomial(), lh);
        cand.push_back({g, hi, std::move(l), 0});
      }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (basis[cand[a].i].leading_monomial().coprime_with(lh)) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) &&
            (!(cand[b].lcm == cand[a].lcm) || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    // Coprime leading monomials: the pair reduces to zero.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a] && !basis[cand[a].i].leading_monomial().coprime_with(lh)) {
        cand[a].sugar = pair_sugar(cand[a].i, cand[a].j, cand[a].lcm);
        fresh.push_back(std::move(cand[a]));
      }
    // Old pairs made redundant by h.
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial li = lcm(basis[p.i].leading_monomial(), lh);
      const Monomial lj = lcm(basis[p.j].leading_monomial(), lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (auto& p : fresh) pairs.push_back(std::move(p));
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(basis[g].leading_monomial())) active[g] = false;
  };

  {
    std::vector<Poly> start;
    for (const auto& g : gens)
      if (!g.is_zero()) start.push_back(g.monic());
    std::sort(start.begin(), start.end(), [order](const Poly& a, const Poly& b) {
      return compare(order, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (auto& g : start) {
      deadline.check();
      Poly h = detail::top_reduce(g, basis, active, deadline);
      if (h.is_zero()) continue;
      const unsigned s = h.total_degree();
      insert(h.monic(), s);
    }
  }

  while (!pairs.empty()) {
    deadline.check();
    auto best = std::min_element(pairs.begin(), pairs.end(), [order](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      const auto c = compare(order, a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair p = *best;
    pairs.erase(best);
    Poly h = detail::top_reduce(detail::s_polynomial(basis[p.i], basis[p.j]), basis, active, deadline);
    if (h.is_zero()) continue;
    insert(h.monic(), p.sugar);
  }

  // Interreduce the active elements into the reduced basis.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (active[i]) minimal.push_back(basis[i]);
  std::sort(minimal.begin(), minimal.end(), [order](const Poly& a, const Poly& b) {
    return compare(order, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    Poly r = normal_form(minimal[i].tail(), others, deadline);
    r += Poly::monomial(ring, minimal[i].leading_monomial(), minimal[i].leading_coeff());
    reduced.push_back(r.monic());
  }

#ifdef REESDET_VERIFY_GROEBNER
  if (auto why = verify_groebner(gens, reduced); !why.empty())
    throw Error("internal Groebner basis check failed: " + why);
#endif
  return reduced;
}

/// Groebner basis with respect to `order`; generators are moved into a copy
/// of their ring carrying that order.
template <CoefficientField F>
[[nodiscard]] std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& gens,
                                                    MonomialOrder order,
                                                    const Deadline& deadline = {}) {
  if (gens.empty() || gens.front().ring().order() == order) return buchberger(gens, deadline);
  const auto& r = gens.front().ring();
  auto target = poly::make_ring<F>(r.variables(), r.field(), order);
  std::vector<Polynomial<F>> moved;
  for (const auto& g : gens) {
    gens.front().check_same_ring(g);
    moved.push_back(g.in_ring(target));
  }
  return buchberger(moved, deadline);
}

}  // namespace reesdet::groebner
