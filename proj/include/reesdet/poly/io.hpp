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

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reesdet/errors.hpp"
#include "reesdet/poly/polynomial.hpp"

namespace reesdet::poly {

/// Canonical text: terms in descending order, explicit '*' and '^',
/// unit coefficients omitted.
template <CoefficientField F>
[[nodiscard]] std::string to_string(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  const F& f = p.field();
  const auto& names = p.ring().variables();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = f.is_negative(t.coeff);
    const auto mag = neg ? f.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!body.empty()) body += '*';
      body += names[i];
      if (e > 1) body += '^' + std::to_string(e);
    }
    if (body.empty()) {
      out += f.to_string(mag);
    } else if (f.is_one(mag)) {
      out += body;
    } else {
      out += f.to_string(mag) + '*' + body;
    }
  }
  return out;
}

namespace detail {

template <CoefficientField F>
class Parser {
 public:
  using Poly = Polynomial<F>;

  Parser(std::string_view text, RingPtr<F> ring, std::vector<std::string>* notes)
      : text_(text), ring_(std::move(ring)), notes_(notes) {}

  Poly run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial text", pos_);
    Poly p = expr();
    if (pos_ != text_.size()) unexpected();
    return p;
  }

 private:
  // expr := ['-'] term (('+'|'-') term)*
  Poly expr() {
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      advance();
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      Poly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Poly term() {
    Poly acc = factor();
    while (peek() == '*') {
      advance();
      acc *= factor();
    }
    return acc;
  }

  // factor := base ('^' NAT)?
  Poly factor() {
    Poly b = base();
    if (peek() == '^') {
      advance();
      const std::size_t at = pos_;
      mpz_class e = natural();
      if (e > 65535) throw ParseError("exponent too large", at);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  // base := NAT | NAT '/' NAT | IDENT | '(' expr ')'
  Poly base() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      advance();
      Poly inner = expr();
      if (peek() != ')') unexpected();
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const F& f = ring_->field();
      mpz_class num = natural();
      note_reduction(num, at);
      auto value = f.from_integer(num);
      if (peek() == '/') {
        advance();
        const std::size_t den_at = pos_;
        mpz_class den = natural();
        if (den == 0) throw ParseError("zero denominator", den_at);
        note_reduction(den, den_at);
        auto dv = f.from_integer(den);
        if (f.is_zero(dv))
          throw ParseError("denominator vanishes in " + f.spec().name(), den_at);
        value = f.mul(value, f.inv(dv));
      }
      return Poly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      const std::string name(text_.substr(pos_, end - pos_));
      const auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown identifier '" + name + "'", at);
      pos_ = end;
      skip_ws();
      return Poly::variable(ring_, *idx);
    }
    unexpected();
  }

  mpz_class natural() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) unexpected();
    mpz_class z(std::string(text_.substr(start, pos_ - start)), 10);
    skip_ws();
    return z;
  }

  void note_reduction(const mpz_class& z, std::size_t at) {
    const auto spec = ring_->field().spec();
    if (notes_ == nullptr || spec.kind != FieldKind::prime || z < spec.p) return;
    notes_->push_back("coefficient " + z.get_str() + " at position " + std::to_string(at) +
                      " reduced modulo " + std::to_string(spec.p));
  }

  [[noreturn]] void unexpected() const {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() {
    ++pos_;
    skip_ws();
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  RingPtr<F> ring_;
  std::vector<std::string>* notes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial grammar
///   expr := ['-'] term (('+'|'-') term)*,  term := factor ('*' factor)*,
///   factor := base ('^' NAT)?,  base := NAT | NAT/NAT | IDENT | '(' expr ')'.
/// Positions in ParseError are 0-based byte offsets. When `notes` is given,
/// coefficients reduced modulo p are reported there.
template <CoefficientField F>
[[nodiscard]] Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring,
                                             std::vector<std::string>* notes = nullptr) {
  return detail::Parser<F>(text, ring, notes).run();
}

}  // namespace reesdet::poly
