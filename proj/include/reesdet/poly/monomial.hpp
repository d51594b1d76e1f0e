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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reesdet/errors.hpp"

namespace reesdet::poly {

/// Exponent vector with a cached total degree and a 64-bit support signature
/// (bit i%64 is set when some variable with index congruent to i occurs).
/// The signature only rules divisibility out; it never proves it.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { recompute(); }

  [[nodiscard]] static Monomial variable(std::size_t nvars, std::size_t index,
                                         Exponent power = 1) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    m.recompute();
    return m;
  }

  [[nodiscard]] std::size_t size() const noexcept { return exps_.size(); }
  [[nodiscard]] std::uint32_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::uint64_t signature() const noexcept { return signature_; }
  [[nodiscard]] Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  [[nodiscard]] std::span<const Exponent> exponents() const noexcept { return exps_; }
  [[nodiscard]] bool is_one() const noexcept { return degree_ == 0; }

  [[nodiscard]] bool divides(const Monomial& other) const noexcept {
    if ((signature_ & ~other.signature_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  [[nodiscard]] bool coprime_with(const Monomial& other) const noexcept {
    if ((signature_ & other.signature_) == 0) return true;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  /// Indices of the variables that occur.
  [[nodiscard]] std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) out.push_back(i);
    return out;
  }

  [[nodiscard]] friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
      if (e > std::numeric_limits<Exponent>::max()) throw InputError("exponent overflow");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.signature_ = a.signature_ | b.signature_;
    return r;
  }

  /// a / b; requires b | a.
  [[nodiscard]] friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    r.recompute();
    return r;
  }

  [[nodiscard]] friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.recompute();
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  void recompute() noexcept {
    degree_ = 0;
    signature_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      degree_ += exps_[i];
      if (exps_[i] != 0) signature_ |= std::uint64_t{1} << (i % 64);
    }
  }

  std::vector<Exponent> exps_;
  std::uint32_t degree_ = 0;
  std::uint64_t signature_ = 0;
};

enum class MonomialOrder { grevlex, lex };

[[nodiscard]] inline std::string_view to_string(MonomialOrder order) noexcept {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

[[nodiscard]] inline MonomialOrder parse_monomial_order(std::string_view text) {
  if (text == "grevlex") return MonomialOrder::grevlex;
  if (text == "lex") return MonomialOrder::lex;
  throw InputError("unknown monomial order '" + std::string(text) + "'");
}

/// Total order on monomials of one ring; variable 0 is the largest variable.
[[nodiscard]] inline std::strong_ordering compare(MonomialOrder order, const Monomial& a,
                                                  const Monomial& b) noexcept {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = ea.size(); i-- > 0;)
      if (ea[i] != eb[i]) return eb[i] <=> ea[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  return std::strong_ordering::equal;
}

}  // namespace reesdet::poly
