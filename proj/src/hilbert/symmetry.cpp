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

#include "qcx/symmetry.hpp"

#include <string>

#include "qcx/errors.hpp"

namespace qcx {

std::string to_string(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::GOE: return "GOE";
    case SymmetryClass::GUE: return "GUE";
    case SymmetryClass::GSE: return "GSE";
  }
  return "?";
}

SymmetryClass symmetry_class_from_string(std::string_view name) {
  if (name == "GOE") return SymmetryClass::GOE;
  if (name == "GUE") return SymmetryClass::GUE;
  if (name == "GSE") return SymmetryClass::GSE;
  throw ArgumentError("unknown symmetry class '" + std::string(name) + "'");
}

}  // namespace qcx
