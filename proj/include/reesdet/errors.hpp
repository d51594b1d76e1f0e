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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reesdet {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: bad text, mismatched rings, indices
/// outside a matrix, parameters outside a formula's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical hypothesis required by an operation does not hold on the
/// given input (for example an ideal that is not of generic height).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation ran past its deadline.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace reesdet
