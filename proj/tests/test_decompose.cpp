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

#include <gtest/gtest.h>

#include <algorithm>

#include "chordalm/catalog.hpp"
#include "chordalm/constructions.hpp"
#include "chordalm/decompose.hpp"
#include "oracles.hpp"

using namespace chordalm;

namespace {

template <typename Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

RepMatroid fano_fano() {
  GluePairing g{{{"001", "001"}, {"010", "010"}, {"011", "011"}}};
  return gpc(pg(3, 2), pg(3, 2), g, GpcMode::kProjectiveGuts);
}

RepMatroid two_triangles() {
  return gpc(pg(2, 2), pg(2, 2), GluePairing{{{"01", "01"}}}, GpcMode::kProjectiveGuts);
}

const std::vector<RepMatroid>& binary_catalog() {
  static const std::vector<RepMatroid> all = catalog_universe(2, 4).members;
  return all;
}

using SepKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

ElementSet subset_of(std::size_t n, std::uint64_t mask) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) s.insert(i);
  return s;
}

bool vertical(const RepMatroid& m, const ElementSet& x, const ElementSet& y, std::size_t r) {
  std::size_t rx = oracle::rank_of(m, x), ry = oracle::rank_of(m, y);
  if (rx + ry < r) return false;
  return std::min(rx, ry) >= rx + ry - r + 1;
}

SepKey key_of(const RepMatroid& m, const ElementSet& x, const ElementSet& y) {
  auto a = oracle::closure(m, x).members(), b = oracle::closure(m, y).members();
  return std::minmax(a, b);
}

/// Flat pairs covering E, with flats found as closure fixed points.
std::set<SepKey> flat_pair_separations(const RepMatroid& m) {
  std::size_t n = m.size(), r = oracle::rank_of(m, m.ground());
  std::vector<ElementSet> fl;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet s = subset_of(n, mask);
    if (oracle::closure(m, s) == s && s != m.ground()) fl.push_back(s);
  }
  std::set<SepKey> out;
  for (const auto& f1 : fl)
    for (const auto& f2 : fl) {
      if ((f1 | f2) != m.ground() || f1 == f2) continue;
      ElementSet x = f1 - f2;
      if (vertical(m, x, f2, r)) out.insert(key_of(m, x, f2));
    }
  return out;
}

/// Every partition of E, straight from the definition.
std::set<SepKey> partition_separations(const RepMatroid& m) {
  std::size_t n = m.size(), r = oracle::rank_of(m, m.ground());
  std::set<SepKey> out;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    ElementSet x = subset_of(n, mask);
    if (vertical(m, x, x.complement(), r)) out.insert(key_of(m, x, x.complement()));
  }
  return out;
}

TEST(VerticalSeparations, Examples) {
  for (std::size_t r = 1; r <= 4; ++r) EXPECT_TRUE(vertical_separations(pg(r, 2)).empty());
  EXPECT_TRUE(vertical_separations(pg(3, 3)).empty());

  RepMatroid tt = two_triangles();
  auto seps = vertical_separations(tt);
  ASSERT_EQ(seps.size(), 1u);
  EXPECT_EQ(seps[0].k, 2u);
  EXPECT_EQ(seps[0].guts.size(), 1u);
  EXPECT_EQ(modular_side(tt, seps[0]), ModularSide::kBoth);

  RepMatroid ff = fano_fano();
  auto three = vertical_separations(ff, 3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(ff.labels_of(three[0].guts), (std::vector<std::string>{"001", "010", "011"}));
  EXPECT_EQ(modular_side(ff, three[0]), ModularSide::kBoth);
  auto report = check_guts_rank(ff);
  EXPECT_TRUE(report.violations.empty());
}

TEST(VerticalSeparations, InvariantsAndBruteForce) {
  for (const auto& m : binary_catalog()) {
    std::size_t r = matroid_rank(m);
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> got;
    for (const auto& s : vertical_separations(m)) {
      EXPECT_EQ((s.x | s.y), m.ground());
      EXPECT_FALSE(s.x.intersects(s.y));
      EXPECT_EQ(s.guts, closure(m, s.x) & closure(m, s.y));
      std::size_t rx = rank_of(m, s.x), ry = rank_of(m, s.y);
      EXPECT_EQ(rx + ry - r, s.k - 1);
      EXPECT_GE(std::min(rx, ry), s.k);
      auto a = closure(m, s.x).members(), b = closure(m, s.y).members();
      got.insert(std::minmax(a, b));
    }
    if (m.size() > 10) continue;
    EXPECT_EQ(got, flat_pair_separations(m)) << describe_member(m);
    // Partitions whose sides are both non-flats can add closure pairs, but
    // never remove one, and roundness agrees.
    auto all = partition_separations(m);
    EXPECT_TRUE(std::includes(all.begin(), all.end(), got.begin(), got.end()));
    EXPECT_EQ(got.empty(), all.empty());
  }
}

TEST(Round, Examples) {
  EXPECT_TRUE(is_round(pg(3, 2)));
  EXPECT_FALSE(is_round(circuit_matroid(4, 2)));
  EXPECT_TRUE(is_round(graphic(complete_graph(4))));
  for (const auto& m : binary_catalog()) EXPECT_EQ(is_round(m), every_cocircuit_spanning(m));
}

TEST(ModularSide, Errors) {
  RepMatroid ff = fano_fano();
  VerticalSep bogus{ff.ground(), ff.empty_set(), ff.empty_set(), 1};
  expect_error(ErrorCode::kInvalidSeparation, [&] { modular_side(ff, bogus); });
}

TEST(GutsAndModularity, HoldOnChordalCatalog) {
  std::size_t separations = 0;
  for (const auto& m : binary_catalog()) {
    if (!is_chordal(m).chordal) continue;
    auto report = check_guts_rank(m);
    EXPECT_TRUE(report.violations.empty());
    for (const auto& s : vertical_separations(m)) {
      ++separations;
      EXPECT_EQ(rank_of(m, s.guts), s.k - 1);
      EXPECT_NE(modular_side(m, s), ModularSide::kNeither);
    }
  }
  EXPECT_GT(separations, 0u);
}

TEST(DecomposeTree, Examples) {
  auto leaf = decompose_tree(pg(3, 2), DecompMode::kGfqProjective);
  ASSERT_EQ(leaf.nodes.size(), 1u);
  EXPECT_EQ(leaf.nodes[0].leaf, LeafCertificate::kProjectiveGeometry);

  auto t = decompose_tree(fano_fano(), DecompMode::kGfqProjective);
  EXPECT_EQ(t.internal_count(), 1u);
  EXPECT_EQ(t.leaf_count(), 2u);
  EXPECT_EQ(t.nodes[0].glue, (std::vector<std::string>{"001", "010", "011"}));
  for (const auto& n : t.nodes)
    if (n.left < 0) {
      EXPECT_TRUE(proj_equivalent(n.matroid, pg(3, 2)));
    }

  auto k4 = decompose_tree(graphic(complete_graph(4)), DecompMode::kChordalModular);
  ASSERT_EQ(k4.nodes.size(), 1u);
  EXPECT_EQ(k4.nodes[0].leaf, LeafCertificate::kRound);

  expect_error(ErrorCode::kPreconditionFailed, [] { decompose_tree(circuit_matroid(4, 2), DecompMode::kChordalModular); });
  expect_error(ErrorCode::kPreconditionFailed, [] { decompose_tree(graphic(complete_graph(4)), DecompMode::kGfqProjective); });
}

TEST(DecomposeTree, CatalogRecomposesAndMatchesChordality) {
  for (const auto& m : binary_catalog()) {
    bool gfq = !has_induced_minor(m, forbidden_family(2, Route::kMinor)).has_value();
    auto tree = try_decompose(m, DecompMode::kGfqProjective);
    EXPECT_EQ(tree.has_value(), gfq) << describe_member(m);
    if (tree) {
      EXPECT_TRUE(proj_equivalent(recompose(*tree), m));
      for (const auto& n : tree->nodes)
        if (n.left < 0) {
          EXPECT_EQ(classify(n.matroid).kind, FlatKind::kProjectiveGeometry);
        }
    }
    if (is_chordal(m).chordal) {
      auto ct = decompose_tree(m, DecompMode::kChordalModular);
      EXPECT_TRUE(proj_equivalent(recompose(ct), m));
      for (const auto& n : ct.nodes)
        if (n.left < 0) {
          EXPECT_TRUE(is_round(n.matroid));
        }
    }
  }
}

TEST(DecomposeTree, Deterministic) {
  RepMatroid m = fano_fano();
  auto a = decompose_tree(m, DecompMode::kGfqProjective);
  auto b = decompose_tree(m, DecompMode::kGfqProjective);
  ASSERT_EQ(a.nodes.size(), b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    EXPECT_EQ(a.nodes[i].glue, b.nodes[i].glue);
    EXPECT_EQ(a.nodes[i].matroid.points(), b.nodes[i].matroid.points());
  }
}

}  // namespace
