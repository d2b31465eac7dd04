// Copyright 2026 The stabsym Authors
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

namespace stabsym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ConductorTooSmall : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct OddOnly : Error { using Error::Error; };
struct InconsistentSigns : Error { using Error::Error; };
struct NotBasisPreserving : Error { using Error::Error; };
struct Mismatch : Error { using Error::Error; };

}  // namespace stabsym
