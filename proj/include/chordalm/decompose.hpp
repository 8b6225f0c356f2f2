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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chordalm/constructions.hpp"
#include "chordalm/detect.hpp"
#include "chordalm/element_set.hpp"
#include "chordalm/error.hpp"
#include "chordalm/matroid.hpp"
#include "chordalm/modularity.hpp"

namespace chordalm {

/// A vertical k-separation (X, Y) with guts G = cl(X) & cl(Y), exact:
/// r(X) + r(Y) - r(M) = k - 1 and min(r(X), r(Y)) >= k.
struct VerticalSep {
  ElementSet x;
  ElementSet y;
  ElementSet guts;
  std::size_t k = 0;
};

/// Exact vertical separations, one per unordered pair {cl(X), cl(Y)}. They
/// are generated from pairs of flats F1, F2 covering E(M) with X = F1 - F2 and
/// Y = F2, so elements of F1 & F2 sit on the Y side.
inline std::vector<VerticalSep> vertical_separations(const RepMatroid& m, std::optional<std::size_t> only_k = std::nullopt) {
  std::vector<VerticalSep> out;
  std::size_t r = matroid_rank(m);
  std::vector<FlatRecord> all = flats(m);
  // Only proper flats can take part: with F1 = E the Y side has r(Y) < k, and
  // with F2 = E the X side is empty.
  std::vector<const FlatRecord*> proper;
  for (const auto& f : all)
    if (f.rank < r) proper.push_back(&f);
  ElementSet ground = m.ground();
  std::set<std::pair<ElementSet, ElementSet>> seen;
  for (const auto* f1 : proper) {
    for (const auto* f2 : proper) {
      if (f1 == f2 || (f1->elements | f2->elements) != ground) continue;
      ElementSet x = f1->elements - f2->elements;
      const ElementSet& y = f2->elements;
      std::size_t rx = rank_of(m, x);
      std::size_t ry = f2->rank;
      if (rx + ry < r) continue;
      std::size_t k = rx + ry - r + 1;
      if (std::min(rx, ry) < k || (only_k && *only_k != k)) continue;
      ElementSet clx = closure(m, x);
      auto key = clx < y ? std::pair{clx, y} : std::pair{y, clx};
      if (!seen.insert(key).second) continue;
      out.push_back({x, y, clx & y, k});
    }
  }
  return out;
}

inline bool is_round(const RepMatroid& m) { return vertical_separations(m).empty(); }

/// The classical criterion: every cocircuit is spanning.
inline bool every_cocircuit_spanning(const RepMatroid& m) {
  if (matroid_rank(m) == 0) return true;
  for (const auto& c : cocircuits(m))
    if (!is_spanning(m, c)) return false;
  return true;
}

struct GutsRankReport {
  std::size_t separations = 0;
  std::vector<VerticalSep> violations;  // r(G) != k - 1
};

/// For chordal inputs the guts of an exact vertical k-separation has rank k-1.
inline GutsRankReport check_guts_rank(const RepMatroid& m) {
  GutsRankReport report;
  for (auto& sep : vertical_separations(m)) {
    ++report.separations;
    if (rank_of(m, sep.guts) + 1 != sep.k) report.violations.push_back(std::move(sep));
  }
  return report;
}

enum class ModularSide { kX, kY, kBoth, kNeither };

inline const char* to_string(ModularSide s) {
  switch (s) {
    case ModularSide::kX: return "X-side";
    case ModularSide::kY: return "Y-side";
    case ModularSide::kBoth: return "both";
    case ModularSide::kNeither: return "neither";
  }
  return "?";
}

namespace detail {

/// Re-indexes s (a subset of `within`) into restriction(m, within).
inline ElementSet localize(const ElementSet& within, const ElementSet& s) {
  std::vector<std::size_t> pos = within.members();
  ElementSet out(pos.size());
  for (std::size_t j = 0; j < pos.size(); ++j)
    if (s.contains(pos[j])) out.insert(j);
  return out;
}

}  // namespace detail

/// Whether the guts is a modular flat of M|cl(X), of M|cl(Y), of both or of
/// neither.
inline ModularSide modular_side(const RepMatroid& m, const VerticalSep& sep) {
  if (sep.x.universe() != m.size() || sep.y.universe() != m.size() || sep.x.intersects(sep.y) ||
      (sep.x | sep.y) != m.ground()) {
    throw Error(ErrorCode::kInvalidSeparation, "X and Y must partition the ground set");
  }
  ElementSet clx = closure(m, sep.x);
  ElementSet cly = closure(m, sep.y);
  std::size_t r = matroid_rank(m);
  std::size_t rx = rank_of(m, sep.x);
  std::size_t ry = rank_of(m, sep.y);
  if ((clx & cly) != sep.guts || rx + ry + 1 != r + sep.k || std::min(rx, ry) < sep.k) {
    throw Error(ErrorCode::kInvalidSeparation, "not an exact vertical separation with this guts");
  }
  bool on_x = is_modular_flat(restriction(m, clx), detail::localize(clx, sep.guts));
  bool on_y = is_modular_flat(restriction(m, cly), detail::localize(cly, sep.guts));
  if (on_x && on_y) return ModularSide::kBoth;
  if (on_x) return ModularSide::kX;
  if (on_y) return ModularSide::kY;
  return ModularSide::kNeither;
}

enum class DecompMode { kChordalModular, kGfqProjective };

enum class LeafCertificate { kNone, kRound, kProjectiveGeometry };

inline const char* to_string(LeafCertificate c) {
  switch (c) {
    case LeafCertificate::kNone: return "none";
    case LeafCertificate::kRound: return "round";
    case LeafCertificate::kProjectiveGeometry: return "projective-geometry";
  }
  return "?";
}

/// Binary tree of generalized parallel connections. Internal nodes glue
/// their children along `glue`; leaves carry a certificate.
struct DecompTree {
  struct Node {
    RepMatroid matroid;
    LeafCertificate leaf = LeafCertificate::kNone;
    std::vector<std::string> glue;
    std::size_t k = 0;
    int left = -1;
    int right = -1;
  };
  DecompMode mode = DecompMode::kGfqProjective;
  std::vector<Node> nodes;  // nodes[0] is the root

  std::size_t leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.left < 0; }));
  }
  std::size_t internal_count() const { return nodes.size() - leaf_count(); }
};

namespace detail {

inline bool leaf_ok(const RepMatroid& m, DecompMode mode) {
  if (mode == DecompMode::kGfqProjective) return m.size() == pg_point_count(matroid_rank(m), m.q());
  return is_round(m);
}

/// Split with the smallest guts rank, ties broken by the lex order of the
/// guts and then of X.
inline std::optional<VerticalSep> choose_split(const RepMatroid& m, DecompMode mode) {
  std::optional<VerticalSep> best;
  for (auto& sep : vertical_separations(m)) {
    std::size_t rg = rank_of(m, sep.guts);
    if (rg + 1 != sep.k) continue;
    if (mode == DecompMode::kGfqProjective) {
      if (sep.guts.size() != pg_point_count(rg, m.q())) continue;
    } else if (modular_side(m, sep) == ModularSide::kNeither) {
      continue;
    }
    if (best) {
      std::size_t rb = rank_of(m, best->guts);
      if (rb < rg) continue;
      if (rb == rg) {
        if (best->guts.size() != sep.guts.size()) {
          if (best->guts.size() < sep.guts.size()) continue;
        } else if (best->guts != sep.guts) {
          if (lex_less(best->guts, sep.guts)) continue;
        } else if (!lex_less(sep.x, best->x)) {
          continue;
        }
      }
    }
    best = std::move(sep);
  }
  return best;
}

/// Returns the index of the new node, or -1 when some piece has no valid split.
inline int build_tree(const RepMatroid& m, DecompMode mode, DecompTree& tree) {
  int id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({m, LeafCertificate::kNone, {}, 0, -1, -1});
  if (leaf_ok(m, mode)) {
    tree.nodes[id].leaf = mode == DecompMode::kGfqProjective ? LeafCertificate::kProjectiveGeometry
                                                             : LeafCertificate::kRound;
    return id;
  }
  auto sep = choose_split(m, mode);
  if (!sep) return -1;
  ElementSet clx = closure(m, sep->x);
  ElementSet cly = closure(m, sep->y);
  tree.nodes[id].glue = m.labels_of(sep->guts);
  tree.nodes[id].k = sep->k;
  int l = build_tree(restriction(m, clx), mode, tree);
  if (l < 0) return -1;
  int r = build_tree(restriction(m, cly), mode, tree);
  if (r < 0) return -1;
  tree.nodes[id].left = l;
  tree.nodes[id].right = r;
  return id;
}

inline RepMatroid recompose_node(const DecompTree& tree, int id) {
  const auto& node = tree.nodes[id];
  if (node.left < 0) return node.matroid;
  GluePairing glue;
  for (const auto& g : node.glue) glue.pairs.emplace_back(g, g);
  GpcMode mode = tree.mode == DecompMode::kGfqProjective ? GpcMode::kProjectiveGuts : GpcMode::kModularGuts;
  return gpc(recompose_node(tree, node.left), recompose_node(tree, node.right), glue, mode);
}

}  // namespace detail

/// Folds gpc over the tree bottom-up.
inline RepMatroid recompose(const DecompTree& tree) { return detail::recompose_node(tree, 0); }

/// Decomposition without a precondition check: empty when some piece is
/// neither a leaf nor splittable. A produced tree always recomposes to a
/// matroid projectively equivalent to m (GutsLeak otherwise).
inline std::optional<DecompTree> try_decompose(const RepMatroid& m, DecompMode mode) {
  DecompTree tree;
  tree.mode = mode;
  if (detail::build_tree(m, mode, tree) < 0) return std::nullopt;
  if (!proj_equivalent(recompose(tree), m)) {
    throw Error(ErrorCode::kGutsLeak, "decomposition does not recompose to its input");
  }
  return tree;
}

/// Chordal-modular mode needs a chordal input, gfq-projective mode a
/// GF(q)-chordal one (by excluded induced minors). A valid input that cannot
/// be split is an invariant violation and raises NoValidSplit.
inline DecompTree decompose_tree(const RepMatroid& m, DecompMode mode) {
  if (mode == DecompMode::kChordalModular && !is_chordal(m).chordal) {
    throw Error(ErrorCode::kPreconditionFailed, "chordal-modular decomposition needs a chordal matroid");
  }
  if (mode == DecompMode::kGfqProjective && has_induced_minor(m, forbidden_family(m.q(), Route::kMinor))) {
    throw Error(ErrorCode::kPreconditionFailed, "gfq-projective decomposition needs a GF(q)-chordal matroid");
  }
  auto tree = try_decompose(m, mode);
  if (!tree) throw Error(ErrorCode::kNoValidSplit, "no valid split for a matroid satisfying the precondition");
  return *tree;
}

}  // namespace chordalm
