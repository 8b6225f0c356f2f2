// Copyright 2026 The chordalm Authors.
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

#include <optional>

#include "chordalm/element_set.hpp"
#include "chordalm/matroid.hpp"

namespace chordalm {

struct ModularityResult {
  bool modular = true;
  std::optional<ElementSet> violating_flat;
};

/// F is modular when r(F) + r(H) = r(F & H) + r(F | H) for every flat H.
inline ModularityResult check_modular_flat(const RepMatroid& m, const ElementSet& f) {
  if (!is_flat(m, f)) throw Error(ErrorCode::kNotAFlat, "modularity is only defined for flats");
  std::size_t rf = rank_of(m, f);
  for (const auto& h : flats(m)) {
    if (rf + h.rank != rank_of(m, f & h.elements) + rank_of(m, f | h.elements)) {
      return {false, h.elements};
    }
  }
  return {};
}

inline bool is_modular_flat(const RepMatroid& m, const ElementSet& f) {
  return check_modular_flat(m, f).modular;
}

}  // namespace chordalm
