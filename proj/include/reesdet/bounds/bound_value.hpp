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

#include <cstdint>
#include <string>
#include <utility>

#include "reesdet/errors.hpp"

namespace reesdet::bounds {

/// Upper bound on a generation or concentration degree.
///  - neg_infinity: the module vanishes.
///  - finite: the degree is at most `value`.
///  - pos_infinity: no bound is available.
///  - conditional: at most max{term, value}, with `term` an unknown generic
///    quantity such as 2*b0(A_3(J)).
///  - symbolic: at most term + value, with `term` an unknown resolution
///    degree.
class BoundValue {
 public:
  enum class Tag { neg_infinity, finite, pos_infinity, conditional, symbolic };

  [[nodiscard]] static BoundValue neg_infinity() { return BoundValue(Tag::neg_infinity, 0, {}); }
  [[nodiscard]] static BoundValue finite(std::int64_t v) { return BoundValue(Tag::finite, v, {}); }
  [[nodiscard]] static BoundValue pos_infinity() { return BoundValue(Tag::pos_infinity, 0, {}); }
  [[nodiscard]] static BoundValue conditional(std::string term, std::int64_t v) {
    return BoundValue(Tag::conditional, v, std::move(term));
  }
  [[nodiscard]] static BoundValue symbolic(std::string term, std::int64_t offset) {
    return BoundValue(Tag::symbolic, offset, std::move(term));
  }

  [[nodiscard]] Tag tag() const noexcept { return tag_; }
  [[nodiscard]] bool is_neg_infinity() const noexcept { return tag_ == Tag::neg_infinity; }
  [[nodiscard]] bool is_finite() const noexcept { return tag_ == Tag::finite; }
  /// Finite part; meaningful for finite, conditional and symbolic values.
  [[nodiscard]] std::int64_t value() const noexcept { return value_; }
  [[nodiscard]] const std::string& term() const noexcept { return term_; }

  [[nodiscard]] std::string to_string() const {
    switch (tag_) {
      case Tag::neg_infinity: return "-inf";
      case Tag::finite: return std::to_string(value_);
      case Tag::pos_infinity: return "+inf";
      case Tag::conditional: return "max{" + term_ + ", " + std::to_string(value_) + "}";
      case Tag::symbolic:
        if (value_ == 0) return term_;
        return term_ + (value_ < 0 ? " - " : " + ") + std::to_string(value_ < 0 ? -value_ : value_);
    }
    return {};
  }

  friend bool operator==(const BoundValue&, const BoundValue&) = default;

 private:
  BoundValue(Tag tag, std::int64_t v, std::string term)
      : tag_(tag), value_(v), term_(std::move(term)) {}

  Tag tag_;
  std::int64_t value_;
  std::string term_;
};

[[nodiscard]] inline std::string to_string(BoundValue::Tag t) {
  switch (t) {
    case BoundValue::Tag::neg_infinity: return "neg_infinity";
    case BoundValue::Tag::finite: return "finite";
    case BoundValue::Tag::pos_infinity: return "pos_infinity";
    case BoundValue::Tag::conditional: return "conditional";
    case BoundValue::Tag::symbolic: return "symbolic";
  }
  return {};
}

[[nodiscard]] inline BoundValue::Tag parse_bound_tag(const std::string& s) {
  using T = BoundValue::Tag;
  for (T t : {T::neg_infinity, T::finite, T::pos_infinity, T::conditional, T::symbolic})
    if (to_string(t) == s) return t;
  throw InputError("unknown bound tag '" + s + "'");
}

[[nodiscard]] inline BoundValue make_bound(BoundValue::Tag tag, std::int64_t value, std::string term) {
  using T = BoundValue::Tag;
  switch (tag) {
    case T::neg_infinity: return BoundValue::neg_infinity();
    case T::finite: return BoundValue::finite(value);
    case T::pos_infinity: return BoundValue::pos_infinity();
    case T::conditional: return BoundValue::conditional(std::move(term), value);
    case T::symbolic: return BoundValue::symbolic(std::move(term), value);
  }
  return BoundValue::pos_infinity();
}

}  // namespace reesdet::bounds
