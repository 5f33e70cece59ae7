// Copyright 2026 The qcomplex Authors
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

#include <string>
#include <string_view>

namespace qcx {

/// Random-matrix symmetry class of a Hamiltonian or of its eigenvectors.
enum class SymmetryClass { GOE, GUE, GSE };

std::string to_string(SymmetryClass cls);
SymmetryClass symmetry_class_from_string(std::string_view name);

}  // namespace qcx
