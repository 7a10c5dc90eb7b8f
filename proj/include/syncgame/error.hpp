/*
 * Copyright 2026 The syncgame Authors
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

#include <stdexcept>
#include <string>

namespace syncgame {

/// Base class for every error raised by the library. `code()` is a short
/// machine-readable tag used by the CLI and the HTTP service.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed or invalid automaton / word input.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

/// A configured resource limit (state count, monoid size, memo size) was hit.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& message) : Error("cap_exceeded", message) {}
};

/// A caller-side precondition does not hold.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

/// An internal invariant was breached. Always a bug, never user error.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message)
      : Error("invariant_violation", message) {}
};

}  // namespace syncgame
