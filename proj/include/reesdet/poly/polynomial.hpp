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
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "reesdet/errors.hpp"
#include "reesdet/poly/field.hpp"
#include "reesdet/poly/monomial.hpp"

namespace reesdet::poly {

[[nodiscard]] inline bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

/// K[x_1, ..., x_d] with a fixed monomial order.
template <CoefficientField F>
class Ring {
 public:
  Ring(std::vector<std::string> variables, F field, MonomialOrder order = MonomialOrder::grevlex)
      : vars_(std::move(variables)), field_(std::move(field)), order_(order) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
      if (!is_identifier(v)) throw InputError("invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
    }
  }

  [[nodiscard]] std::size_t nvars() const noexcept { return vars_.size(); }
  [[nodiscard]] const std::vector<std::string>& variables() const noexcept { return vars_; }
  [[nodiscard]] const F& field() const noexcept { return field_; }
  [[nodiscard]] MonomialOrder order() const noexcept { return order_; }

  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ && a.field_.spec() == b.field_.spec() && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> vars_;
  F field_;
  MonomialOrder order_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
[[nodiscard]] RingPtr<F> make_ring(std::vector<std::string> variables, F field = F{},
                                   MonomialOrder order = MonomialOrder::grevlex) {
  return std::make_shared<const Ring<F>>(std::move(variables), std::move(field), order);
}

/// Result of asking for the common total degree of all terms.
struct HomogeneousDegree {
  enum class Kind { exact, mixed, every };
  Kind kind = Kind::every;
  unsigned degree = 0;  // meaningful only for Kind::exact

  [[nodiscard]] bool homogeneous() const noexcept { return kind != Kind::mixed; }
  [[nodiscard]] std::optional<unsigned> value() const noexcept {
    return kind == Kind::exact ? std::optional<unsigned>(degree) : std::nullopt;
  }
};

/// Element of a polynomial ring. Terms are kept strictly decreasing in the
/// ring's monomial order with no zero coefficients.
template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;

  struct Term {
    Monomial monomial;
    Element coeff;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  [[nodiscard]] static Polynomial constant(RingPtr<F> ring, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(c)});
    return p;
  }

  [[nodiscard]] static Polynomial constant(RingPtr<F> ring, std::int64_t c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }

  [[nodiscard]] static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->nvars()) throw InputError("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index), ring->field().one()});
    return p;
  }

  [[nodiscard]] static Polynomial monomial(RingPtr<F> ring, Monomial m, Element c) {
    if (m.size() != ring->nvars()) throw InputError("monomial has the wrong variable count");
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  /// Builds the canonical polynomial from terms in any order, combining
  /// repeated monomials.
  [[nodiscard]] static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.monomial.size() != p.ring_->nvars())
        throw InputError("monomial has the wrong variable count");
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  [[nodiscard]] const Ring<F>& ring() const noexcept { return *ring_; }
  [[nodiscard]] const RingPtr<F>& ring_ptr() const noexcept { return ring_; }
  [[nodiscard]] const F& field() const noexcept { return ring_->field(); }
  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  [[nodiscard]] const Term& leading_term() const {
    if (terms_.empty()) throw InputError("the zero polynomial has no leading term");
    return terms_.front();
  }
  [[nodiscard]] const Monomial& leading_monomial() const { return leading_term().monomial; }
  [[nodiscard]] const Element& leading_coeff() const { return leading_term().coeff; }

  /// Copy without the leading term.
  [[nodiscard]] Polynomial tail() const {
    Polynomial r(ring_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  /// Same terms over another ring with the same variables and field (for
  /// example a different monomial order).
  [[nodiscard]] Polynomial in_ring(RingPtr<F> other) const {
    if (other->nvars() != ring_->nvars() || !(other->field().spec() == field().spec()))
      throw InputError("target ring is not compatible");
    return from_terms(std::move(other), terms_);
  }

  /// Largest total degree of a term; 0 for the zero polynomial.
  [[nodiscard]] unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial.degree());
    return d;
  }

  [[nodiscard]] HomogeneousDegree homogeneous_degree() const noexcept {
    if (terms_.empty()) return {HomogeneousDegree::Kind::every, 0};
    unsigned d = terms_.front().monomial.degree();
    for (const auto& t : terms_)
      if (t.monomial.degree() != d) return {HomogeneousDegree::Kind::mixed, 0};
    return {HomogeneousDegree::Kind::exact, d};
  }

  [[nodiscard]] Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    return a.combine(b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    return a.combine(b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const F& f = a.field();
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, f.mul(s.coeff, t.coeff)});
    Polynomial r(a.ring_);
    r.terms_ = std::move(prod);
    r.canonicalize();
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  [[nodiscard]] Polynomial scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }

  /// Same polynomial divided by its leading coefficient.
  [[nodiscard]] Polynomial monic() const {
    if (is_zero() || field().is_one(leading_coeff())) return *this;
    return scaled(field().inv(leading_coeff()));
  }

  [[nodiscard]] Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// this - c * m * g in one merge pass.
  [[nodiscard]] Polynomial minus_term_times(const Element& c, const Monomial& m,
                                            const Polynomial& g) const {
    const F& f = field();
    const auto order = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const Element neg_c = f.neg(c);
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial shifted = g.terms_[j].monomial * m;
      if (i == terms_.size()) {
        r.terms_.push_back({std::move(shifted), f.mul(neg_c, g.terms_[j++].coeff)});
        continue;
      }
      const auto cmp = compare(order, terms_[i].monomial, shifted);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({std::move(shifted), f.mul(neg_c, g.terms_[j++].coeff)});
      } else {
        Element s = f.add(terms_[i].coeff, f.mul(neg_c, g.terms_[j].coeff));
        if (!f.is_zero(s)) r.terms_.push_back({terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  /// Exact quotient a / b; throws when b does not divide a.
  [[nodiscard]] friend Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    if (b.is_zero()) throw InputError("division by the zero polynomial");
    const F& f = a.field();
    const Element lc_inv = f.inv(b.leading_coeff());
    Polynomial rest = a;
    std::vector<Term> q;
    while (!rest.is_zero()) {
      const auto& lt = rest.leading_term();
      if (!b.leading_monomial().divides(lt.monomial))
        throw InputError("polynomial division is not exact");
      Monomial m = quotient(lt.monomial, b.leading_monomial());
      Element c = f.mul(lt.coeff, lc_inv);
      rest = rest.minus_term_times(c, m, b);
      q.push_back({std::move(m), std::move(c)});
    }
    Polynomial r(a.ring_);
    r.terms_ = std::move(q);  // generated in decreasing order
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    const F& f = a.field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !f.equal(a.terms_[i].coeff, b.terms_[i].coeff))
        return false;
    return true;
  }

  void check_same_ring(const Polynomial& other) const {
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
      throw InputError("operands belong to different polynomial rings");
  }

 private:
  Polynomial combine(const Polynomial& b, bool subtract) const {
    const F& f = field();
    const auto order = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    auto other = [&](const Element& c) { return subtract ? f.neg(c) : c; };
    while (i < terms_.size() && j < b.terms_.size()) {
      const auto cmp = compare(order, terms_[i].monomial, b.terms_[j].monomial);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({b.terms_[j].monomial, other(b.terms_[j].coeff)});
        ++j;
      } else {
        Element s = subtract ? f.sub(terms_[i].coeff, b.terms_[j].coeff)
                             : f.add(terms_[i].coeff, b.terms_[j].coeff);
        if (!f.is_zero(s)) r.terms_.push_back({terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back({b.terms_[j].monomial, other(b.terms_[j].coeff)});
    return r;
  }

  void canonicalize() {
    const auto order = ring_->order();
    const F& f = field();
    std::sort(terms_.begin(), terms_.end(), [order](const Term& a, const Term& b) {
      return compare(order, a.monomial, b.monomial) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff = f.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

}  // namespace reesdet::poly
