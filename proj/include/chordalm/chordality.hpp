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
#include <string>
#include <string_view>

#include "chordalm/decompose.hpp"
#include "chordalm/detect.hpp"
#include "chordalm/matroid.hpp"
#include "chordalm/peo.hpp"

namespace chordalm {

enum class ChordalMethod { kMinor, kRestriction, kPeo, kDecompose };

inline std::optional<ChordalMethod> parse_method(std::string_view s) {
  if (s == "minor") return ChordalMethod::kMinor;
  if (s == "restriction") return ChordalMethod::kRestriction;
  if (s == "peo") return ChordalMethod::kPeo;
  if (s == "decompose") return ChordalMethod::kDecompose;
  return std::nullopt;
}

/// Outcome of one characterization. A negative answer from the minor or
/// restriction route carries a witness; a positive answer from the peo or
/// decompose route carries its certificate.
struct GfqChordalResult {
  bool chordal = false;
  std::optional<Witness> witness;
  std::optional<PeoCertificate> peo;
  std::optional<DecompTree> tree;
};

inline GfqChordalResult is_gfq_chordal(const RepMatroid& m, ChordalMethod method) {
  GfqChordalResult out;
  switch (method) {
    case ChordalMethod::kMinor:
      out.witness = has_induced_minor(m, forbidden_family(m.q(), Route::kMinor));
      out.chordal = !out.witness;
      break;
    case ChordalMethod::kRestriction: {
      auto found = induced_restrictions(m, forbidden_family(m.q(), Route::kRestriction));
      out.chordal = found.empty();
      if (!found.empty()) out.witness = found.front();
      break;
    }
    case ChordalMethod::kPeo:
      out.peo = find_peo(m);
      out.chordal = out.peo.has_value();
      break;
    case ChordalMethod::kDecompose:
      out.tree = try_decompose(m, DecompMode::kGfqProjective);
      out.chordal = out.tree.has_value();
      break;
  }
  return out;
}

}  // namespace chordalm
