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

#include <vector>

#include "stabsym/operators.h"
#include "stabsym/similitude.h"

namespace stabsym {

/// Unitary of one elementary gate for odd d (exact Weil representation).
OpMatrix gate_unitary(const SpGate& g, int d, int n);

/// U_S with U_S T(b) U_S^dag = T(Sb) and U_S U_S' = U_{SS'} (odd d).
OpMatrix metaplectic(const ZModMatrix& s);

}  // namespace stabsym
