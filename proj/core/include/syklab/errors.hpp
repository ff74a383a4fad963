// Copyright 2026 The syklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace syklab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid model or algorithm parameters (ranges, parities, unsupported sizes).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// A dense object would exceed the configured dimension budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Charges that fail to commute with each other or with the Hamiltonian.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The unfolding polynomial is not monotone over the retained levels.
class UnfoldingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Empty or malformed inputs to a diagnostic.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A sector required by a degeneracy policy is missing.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ArchiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace syklab
