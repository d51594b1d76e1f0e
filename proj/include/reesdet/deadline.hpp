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

#include <chrono>
#include <optional>

#include "reesdet/errors.hpp"

namespace reesdet {

/// Optional wall-clock limit for long computations.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  [[nodiscard]] static Deadline after(double seconds) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds));
    return d;
  }

  [[nodiscard]] bool unlimited() const noexcept { return !at_.has_value(); }
  [[nodiscard]] bool expired() const { return at_ && Clock::now() > *at_; }
  void check() const {
    if (expired()) throw TimeoutError("computation exceeded its time limit");
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace reesdet
