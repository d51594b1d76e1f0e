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

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "reesdet/errors.hpp"

namespace reesdet::poly {

enum class FieldKind { rationals, prime };

/// Runtime description of a coefficient field.
struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint32_t p = 32003;  // ignored for rationals

  static constexpr std::uint32_t default_prime = 32003;

  [[nodiscard]] static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
  [[nodiscard]] static FieldSpec prime_field(std::uint32_t p = default_prime) {
    return {FieldKind::prime, p};
  }

  [[nodiscard]] std::uint32_t characteristic() const noexcept {
    return kind == FieldKind::rationals ? 0 : p;
  }

  [[nodiscard]] std::string name() const {
    return kind == FieldKind::rationals ? std::string("QQ") : "F_" + std::to_string(p);
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.kind == b.kind && a.characteristic() == b.characteristic();
  }
};

[[nodiscard]] inline bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Operations every coefficient field policy provides. Elements are plain
/// values; the policy object carries the runtime parameters (the modulus).
template <class F>
concept CoefficientField =
    std::copyable<F> && std::copyable<typename F::Element> &&
    requires(const F f, const typename F::Element& a, const typename F::Element& b,
             const mpz_class& z) {
      { f.zero() } -> std::same_as<typename F::Element>;
      { f.one() } -> std::same_as<typename F::Element>;
      { f.add(a, b) } -> std::same_as<typename F::Element>;
      { f.sub(a, b) } -> std::same_as<typename F::Element>;
      { f.mul(a, b) } -> std::same_as<typename F::Element>;
      { f.neg(a) } -> std::same_as<typename F::Element>;
      { f.inv(a) } -> std::same_as<typename F::Element>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.is_one(a) } -> std::same_as<bool>;
      { f.equal(a, b) } -> std::same_as<bool>;
      { f.from_integer(z) } -> std::same_as<typename F::Element>;
      { f.is_negative(a) } -> std::same_as<bool>;
      { f.to_string(a) } -> std::same_as<std::string>;
      { f.spec() } -> std::same_as<FieldSpec>;
    };

/// Z/pZ with p < 2^31, elements stored in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = FieldSpec::default_prime) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw InputError("prime field modulus " + std::to_string(p) +
                       " is not a prime below 2^31");
  }

  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }
  [[nodiscard]] FieldSpec spec() const { return FieldSpec::prime_field(p_); }

  [[nodiscard]] Element zero() const noexcept { return 0; }
  [[nodiscard]] Element one() const noexcept { return 1; }
  [[nodiscard]] Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  [[nodiscard]] Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Element inv(Element a) const {
    if (a == 0) throw InputError("division by zero in " + spec().name());
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<Element>(t < 0 ? t + p_ : t);
  }
  [[nodiscard]] bool is_zero(Element a) const noexcept { return a == 0; }
  [[nodiscard]] bool is_one(Element a) const noexcept { return a == 1; }
  [[nodiscard]] bool equal(Element a, Element b) const noexcept { return a == b; }
  [[nodiscard]] Element from_integer(const mpz_class& z) const {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  [[nodiscard]] Element from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Printing uses the symmetric range (-p/2, p/2].
  [[nodiscard]] bool is_negative(Element a) const noexcept { return a > p_ / 2; }
  [[nodiscard]] std::string to_string(Element a) const {
    return is_negative(a) ? "-" + std::to_string(p_ - a) : std::to_string(a);
  }

 private:
  std::uint32_t p_;
};

/// The rationals with GMP arbitrary-precision arithmetic.
class RationalField {
 public:
  using Element = mpq_class;

  [[nodiscard]] FieldSpec spec() const { return FieldSpec::rationals(); }

  [[nodiscard]] Element zero() const { return 0; }
  [[nodiscard]] Element one() const { return 1; }
  [[nodiscard]] Element add(const Element& a, const Element& b) const { return a + b; }
  [[nodiscard]] Element sub(const Element& a, const Element& b) const { return a - b; }
  [[nodiscard]] Element mul(const Element& a, const Element& b) const { return a * b; }
  [[nodiscard]] Element neg(const Element& a) const { return -a; }
  [[nodiscard]] Element inv(const Element& a) const {
    if (sgn(a) == 0) throw InputError("division by zero in QQ");
    return 1 / a;
  }
  [[nodiscard]] bool is_zero(const Element& a) const { return sgn(a) == 0; }
  [[nodiscard]] bool is_one(const Element& a) const { return a == 1; }
  [[nodiscard]] bool equal(const Element& a, const Element& b) const { return a == b; }
  [[nodiscard]] Element from_integer(const mpz_class& z) const { return Element(z); }
  [[nodiscard]] Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  [[nodiscard]] bool is_negative(const Element& a) const { return sgn(a) < 0; }
  [[nodiscard]] std::string to_string(const Element& a) const { return a.get_str(); }
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

}  // namespace reesdet::poly
