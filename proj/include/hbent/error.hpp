// Copyright 2026 The hbent Authors

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

#include <stdexcept>
#include <string>

namespace hbent {

/// Precondition or input-shape violation (bad label, wrong dimension,
/// normalization failure).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The inputs are well formed but the requested operation is undefined for
/// them (e.g. a swap on a ligand with an ionic component).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Round-off or spectral failure: non-Hermitian input, negativity beyond the
/// clamp tolerance, a zero-norm projection.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace hbent
