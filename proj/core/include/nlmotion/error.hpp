// Copyright 2026 The nlmotion Authors.

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

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nlmotion {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: out-of-range level, negative order, non-finite amplitude.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands whose mode layout or size do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numerical contract was violated (e.g. a matrix flagged Hermitian is not).
class NumericalError : public Error {
 public:
  using Error::Error;
};

using WarningHandler = std::function<void(std::string_view)>;

/// Installs the process-wide warning sink and returns the previous one.
/// Passing an empty handler restores the default (stderr).
WarningHandler set_warning_handler(WarningHandler handler);

/// Routes a non-fatal diagnostic (truncation, degenerate operator) to the sink.
void warn(std::string_view message);

}  // namespace nlmotion
