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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chordalm/constructions.hpp"
#include "chordalm/element_set.hpp"
#include "chordalm/error.hpp"
#include "chordalm/matroid.hpp"

namespace chordalm {

enum class FlatKind { kProjectiveGeometry, kCircuit, kUniform, kGraphicK4, kDualK33, kOther };

/// What a flat looks like as a matroid. `uniform` is filled whenever the flat
/// is uniform, whatever its primary kind, so U_{3,4} = M(C_4) reports both
/// Circuit(4) and Uniform(3,4).
struct Classification {
  FlatKind kind = FlatKind::kOther;
  std::size_t rank = 0;
  std::size_t size = 0;
  std::optional<std::pair<std::size_t, std::size_t>> uniform;

  std::string name() const {
    switch (kind) {
      case FlatKind::kProjectiveGeometry: return "ProjectiveGeometry(" + std::to_string(rank) + ")";
      case FlatKind::kCircuit: return "Circuit(" + std::to_string(size) + ")";
      case FlatKind::kUniform: return "Uniform(" + std::to_string(rank) + "," + std::to_string(size) + ")";
      case FlatKind::kGraphicK4: return "GraphicK4";
      case FlatKind::kDualK33: return "DualK33";
      case FlatKind::kOther: return "Other";
    }
    return "Other";
  }

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// True iff every r(m)-subset of E(m) is independent.
inline bool is_uniform(const RepMatroid& m) {
  std::size_t r = matroid_rank(m);
  return circuits(m, r).empty();
}

/// Classifies the whole ground set of m. Decision order: projective geometry,
/// circuit, uniform, M(K_4), M*(K_{3,3}), other.
inline Classification classify(const RepMatroid& m) {
  Classification c;
  c.rank = matroid_rank(m);
  c.size = m.size();
  if (is_uniform(m)) c.uniform = std::pair{c.rank, c.size};
  if (c.size == pg_point_count(c.rank, m.q())) {
    c.kind = FlatKind::kProjectiveGeometry;
  } else if (c.uniform && c.size == c.rank + 1) {
    c.kind = FlatKind::kCircuit;
  } else if (c.uniform) {
    c.kind = FlatKind::kUniform;
  } else if (m.q() == 2 && c.rank == 3 && c.size == 6) {
    c.kind = FlatKind::kGraphicK4;
  } else if (m.q() == 2 && c.rank == 4 && c.size == 9 && proj_equivalent(m, dual_k33())) {
    c.kind = FlatKind::kDualK33;
  }
  return c;
}

inline Classification recognize_flat(const RepMatroid& m, const ElementSet& flat) {
  if (!is_flat(m, flat)) throw Error(ErrorCode::kNotAFlat, "recognize_flat needs a flat");
  return classify(restriction(m, flat));
}

/// One member or parametric range of a forbidden family.
struct FamilyPattern {
  enum class Kind { kCircuit, kUniform, kGraphicK4, kDualK33 };
  Kind kind = Kind::kCircuit;
  // Circuit: sizes lo..hi (hi == 0 means unbounded). Uniform: U_{lo,hi}.
  std::size_t lo = 0;
  std::size_t hi = 0;

  static FamilyPattern circuits_from(std::size_t n) { return {Kind::kCircuit, n, 0}; }
  static FamilyPattern circuit(std::size_t n) { return {Kind::kCircuit, n, n}; }
  static FamilyPattern uniform(std::size_t r, std::size_t n) { return {Kind::kUniform, r, n}; }
  static FamilyPattern graphic_k4() { return {Kind::kGraphicK4, 0, 0}; }
  static FamilyPattern dual_k33() { return {Kind::kDualK33, 0, 0}; }

  bool matches(const Classification& c) const {
    switch (kind) {
      case Kind::kCircuit:
        // M(C_n) = U_{n-1,n}, which over GF(2) at n = 3 is also PG(1,2).
        return c.uniform && c.uniform->second == c.uniform->first + 1 && c.size >= lo && (hi == 0 || c.size <= hi);
      case Kind::kUniform: return c.uniform && c.uniform->first == lo && c.uniform->second == hi;
      case Kind::kGraphicK4: return c.kind == FlatKind::kGraphicK4;
      case Kind::kDualK33: return c.kind == FlatKind::kDualK33;
    }
    return false;
  }

  std::string name() const {
    switch (kind) {
      case Kind::kCircuit:
        if (hi == lo) return "M(C" + std::to_string(lo) + ")";
        return "M(Cn:n>=" + std::to_string(lo) + ")";
      case Kind::kUniform: return "U" + std::to_string(lo) + "," + std::to_string(hi);
      case Kind::kGraphicK4: return "M(K4)";
      case Kind::kDualK33: return "M*(K33)";
    }
    return "?";
  }
};

struct Family {
  std::string id;
  std::vector<FamilyPattern> patterns;

  bool matches(const Classification& c) const {
    return std::any_of(patterns.begin(), patterns.end(), [&](const auto& p) { return p.matches(c); });
  }

  std::string describe() const {
    std::string s = "{";
    for (std::size_t i = 0; i < patterns.size(); ++i) s += (i ? ", " : "") + patterns[i].name();
    return s + "}";
  }
};

enum class Route { kMinor, kRestriction };

/// The excluded induced minors or induced restrictions characterizing
/// GF(q)-chordal matroids.
///  q = 2:        minors {M(C4), M(K4)};
///                restrictions {M(Cn): n >= 4} + {M(K4), M*(K33)}.
///  q = p > 2:    minors {U2,k: 3 <= k <= p};
///                restrictions {U(n,n+1): n >= 2} + {U(2+t,k+t): 4 <= k <= p, 0 <= t <= p+1-k}.
///  q in {4,8,9}: minors {U2,k: 2 < k <= q} + {U3,q+2};
///                restrictions {U(n,n+1): n >= 2} + {U(2+t,k+t): 4 <= k <= q, 0 <= t <= q-3} + {U3,q+2}.
inline Family forbidden_family(int q, Route route) {
  if (!is_supported_order(q)) throw Error(ErrorCode::kUnsupportedOrder, "no forbidden family for q = " + std::to_string(q));
  Family fam;
  std::size_t uq = static_cast<std::size_t>(q);
  bool prime = q == 2 || q == 3 || q == 5 || q == 7;
  if (q == 2) {
    if (route == Route::kMinor) {
      fam.id = "gf2-minor";
      fam.patterns = {FamilyPattern::circuit(4), FamilyPattern::graphic_k4()};
    } else {
      fam.id = "gf2-restriction";
      fam.patterns = {FamilyPattern::circuits_from(4), FamilyPattern::graphic_k4(), FamilyPattern::dual_k33()};
    }
    return fam;
  }
  fam.id = "gf" + std::to_string(q) + (route == Route::kMinor ? "-minor" : "-restriction");
  if (route == Route::kMinor) {
    for (std::size_t k = 3; k <= uq; ++k) fam.patterns.push_back(FamilyPattern::uniform(2, k));
    if (!prime) fam.patterns.push_back(FamilyPattern::uniform(3, uq + 2));
    return fam;
  }
  fam.patterns.push_back(FamilyPattern::circuits_from(3));
  for (std::size_t k = 4; k <= uq; ++k) {
    std::size_t t_max = prime ? uq + 1 - k : uq - 3;
    for (std::size_t t = 0; t <= t_max; ++t) fam.patterns.push_back(FamilyPattern::uniform(2 + t, k + t));
  }
  if (!prime) fam.patterns.push_back(FamilyPattern::uniform(3, uq + 2));
  return fam;
}

enum class WitnessKind { kInducedRestriction, kInducedMinor };

/// Replaying contract_simplify(M, contracted) and restricting to `flat`
/// (labels of the contraction) reproduces `classification`.
struct Witness {
  WitnessKind kind = WitnessKind::kInducedRestriction;
  std::vector<std::string> contracted;
  std::vector<std::string> flat;
  Classification classification;
};

inline std::vector<Witness> induced_restrictions(const RepMatroid& m, const Family& family) {
  std::vector<Witness> out;
  for (const auto& f : flats(m)) {
    Classification c = classify(restriction(m, f.elements));
    if (family.matches(c)) out.push_back({WitnessKind::kInducedRestriction, {}, m.labels_of(f.elements), c});
  }
  return out;
}

/// Visits every (I, F) with I the greedy basis of a flat of m and F a flat of
/// si(m/I) whose classification is in the family. Induced minors are exactly
/// these restrictions, and si(m/I) depends only on cl(I). Stops when the
/// visitor returns false.
inline void for_each_induced_minor(const RepMatroid& m, const Family& family,
                                   const std::function<bool(const Witness&)>& visit) {
  for (const auto& base : flats(m)) {
    ElementSet contracted = ElementSet::of(m.size(), detail::greedy_basis(m, base.elements));
    Contraction con = contract_simplify(m, contracted);
    for (const auto& f : flats(con.matroid)) {
      Classification c = classify(restriction(con.matroid, f.elements));
      if (!family.matches(c)) continue;
      Witness w{WitnessKind::kInducedMinor, m.labels_of(contracted), con.matroid.labels_of(f.elements), c};
      if (!visit(w)) return;
    }
  }
}

inline std::optional<Witness> has_induced_minor(const RepMatroid& m, const Family& family) {
  std::optional<Witness> found;
  for_each_induced_minor(m, family, [&](const Witness& w) {
    found = w;
    return false;
  });
  return found;
}

/// Re-derives the matroid a witness points at.
inline RepMatroid replay_witness(const RepMatroid& m, const Witness& w) {
  Contraction con = contract_simplify(m, m.select(w.contracted));
  return restriction(con.matroid, con.matroid.select(w.flat));
}

/// Every circuit with at least four elements is (D1 u D2) - e for circuits
/// D1, D2 meeting exactly in e. Over GF(2), D2 = D ^ D1 whenever D1 - D = {e}.
/// Returns the first circuit that does not split, if any.
inline std::optional<ElementSet> unsplit_circuit(const RepMatroid& m) {
  std::vector<ElementSet> all = circuits(m);
  std::unordered_set<ElementSet, ElementSetHash> index(all.begin(), all.end());
  for (const auto& d : all) {
    if (d.size() < 4) continue;
    bool split = false;
    for (const auto& d1 : all) {
      ElementSet outside = d1 - d;
      if (outside.size() != 1) continue;
      ElementSet inside = d1 & d;
      if (inside == d) continue;
      ElementSet d2 = m.q() == 2 ? (d ^ d1) : ((d - d1) | outside);
      if (index.count(d2)) {
        split = true;
        break;
      }
    }
    if (!split) return d;
  }
  return std::nullopt;
}

inline bool is_chordal_circuitsplit(const RepMatroid& m) { return !unsplit_circuit(m).has_value(); }

struct ChordalResult {
  bool chordal = true;
  std::optional<ElementSet> bad_flat;  // a flat that is a circuit of size >= 4
  std::optional<ElementSet> bad_circuit;  // set when q > 2
};

/// Over GF(2): no flat is a circuit with four or more elements. Over larger
/// fields the circuit-splitting definition is evaluated directly.
inline ChordalResult is_chordal(const RepMatroid& m) {
  ChordalResult out;
  if (m.q() == 2) {
    for (const auto& f : flats(m)) {
      if (f.elements.size() >= 4 && f.elements.size() == f.rank + 1 && is_circuit(m, f.elements)) {
        out.chordal = false;
        out.bad_flat = f.elements;
        return out;
      }
    }
    return out;
  }
  out.bad_circuit = unsplit_circuit(m);
  out.chordal = !out.bad_circuit;
  return out;
}

/// Largest n >= 4 with M(C_n) as an induced restriction; 0 if none.
inline std::size_t largest_circuit_induced_restriction(const RepMatroid& m) {
  std::size_t best = 0;
  for (const auto& w : induced_restrictions(m, Family{"circuits", {FamilyPattern::circuits_from(4)}})) {
    best = std::max(best, w.classification.size);
  }
  return best;
}

/// Largest n >= 4 with M(C_n) as an induced minor; 0 if none.
inline std::size_t largest_circuit_induced_minor(const RepMatroid& m) {
  std::size_t best = 0;
  for_each_induced_minor(m, Family{"circuits", {FamilyPattern::circuits_from(4)}}, [&](const Witness& w) {
    best = std::max(best, w.classification.size);
    return true;
  });
  return best;
}

}  // namespace chordalm
