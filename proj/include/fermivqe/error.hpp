// Copyright 2026 The fermivqe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fermivqe {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit/mode count.
class DimensionError : public Error {
    using Error::Error;
};
/// A qubit or mode index is out of range.
class IndexError : public Error {
    using Error::Error;
};
/// A size exceeds a configured limit (oracle, statevector, bitmask width).
class CapacityError : public Error {
    using Error::Error;
};
/// Vector/list lengths or structural shapes disagree.
class ShapeError : public Error {
    using Error::Error;
};
/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
    using Error::Error;
};
/// Observable is not Hermitian (or a generator is not anti-Hermitian).
class InvalidObservableError : public Error {
    using Error::Error;
};
/// Unknown basis set, element or similar lookup failure.
class UnsupportedError : public Error {
    using Error::Error;
};
/// Numerical breakdown during a computation (e.g. non-finite cost).
class ComputationError : public Error {
    using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace fermivqe
