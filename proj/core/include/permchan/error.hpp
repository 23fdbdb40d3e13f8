// Copyright 2026 The permchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace permchan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied malformed input: degree mismatch, out-of-range index,
/// non-bijective image list, unsupported group kind.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (group order, state-space size) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A numeric routine failed to meet its tolerance (character table
/// degeneracy, non-integral multiplicity, indicator residual).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An exact division that must be exact was not. Always a bug.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Certification that every irrep is real (all Frobenius-Schur indicators
/// equal +1) failed.
class NotTotallyOrthogonal : public Error {
 public:
  using Error::Error;
};

/// Quantum decoding found two or more candidates with equal overlap, which
/// means the input was not a channel output of a basis entry.
class AmbiguousDecode : public Error {
 public:
  using Error::Error;
};

}  // namespace permchan
