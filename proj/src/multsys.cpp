// Copyright 2026 the qmf authors
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

#include "qmf/multsys.hpp"

namespace qmf {

ScalarSpaceStructure scalar_space_structure(const MultiplierSystem& u) {
  ScalarSpaceStructure s;
  s.cusp_parameter = u.cusp_parameter();
  s.minimal_weight = s.cusp_parameter;
  s.description = "M * eta^{2m} with m = " + to_string(s.cusp_parameter) +
                  "; minimal weight " + to_string(s.minimal_weight);
  return s;
}

}  // namespace qmf
