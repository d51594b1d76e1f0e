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

#include <compare>
#include <cstdint>
#include <string>

namespace reesdet {

/// A non-negative integer or +infinity.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT(implicit)

  [[nodiscard]] static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.infinite_ = true;
    return e;
  }

  [[nodiscard]] constexpr bool is_infinite() const noexcept { return infinite_; }
  [[nodiscard]] constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; 0 when infinite.
  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return infinite_ ? 0 : value_; }

  [[nodiscard]] std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(const ExtendedNat& a, const ExtendedNat& b) noexcept {
    return a.infinite_ == b.infinite_ && a.value() == b.value();
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a,
                                                    const ExtendedNat& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

[[nodiscard]] constexpr ExtendedNat min(const ExtendedNat& a, const ExtendedNat& b) noexcept {
  return b < a ? b : a;
}

}  // namespace reesdet
