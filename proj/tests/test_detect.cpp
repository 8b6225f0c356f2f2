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

#include <random>

#include "chordalm/catalog.hpp"
#include "chordalm/chordality.hpp"
#include "chordalm/constructions.hpp"
#include "chordalm/detect.hpp"
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

const Family kC4{"c4", {FamilyPattern::circuit(4)}};
const Family kK4{"k4", {FamilyPattern::graphic_k4()}};

const std::vector<RepMatroid>& binary_catalog() {
  static const std::vector<RepMatroid> all = catalog_universe(2, 4).members;
  return all;
}

/// Circuit splitting straight from the definition, on brute-force circuits.
bool chordal_by_definition(const RepMatroid& m) {
  auto cs = oracle::circuits(m);
  std::set<std::vector<std::size_t>> index(cs.begin(), cs.end());
  for (const auto& d : cs) {
    if (d.size() < 4) continue;
    ElementSet dset = ElementSet::of(m.size(), d);
    bool split = false;
    for (const auto& a : cs) {
      for (const auto& b : cs) {
        ElementSet d1 = ElementSet::of(m.size(), a), d2 = ElementSet::of(m.size(), b);
        ElementSet meet = d1 & d2;
        if (meet.size() != 1) continue;
        ElementSet u = d1 | d2;
        u -= meet;
        if (u == dset) split = true;
      }
      if (split) break;
    }
    if (!split) return false;
  }
  return true;
}

/// Induced minors by contracting every independent set, without the
/// one-set-per-span shortcut.
bool has_minor_exhaustive(const RepMatroid& m, const Family& fam) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    ElementSet i(m.size());
    for (std::size_t x = 0; x < m.size(); ++x)
      if (mask >> x & 1) i.insert(x);
    if (!is_independent(m, i)) continue;
    auto con = contract_simplify(m, i);
    for (const auto& f : flats(con.matroid))
      if (fam.matches(classify(restriction(con.matroid, f.elements)))) return true;
  }
  return false;
}

TEST(RecognizeFlat, Examples) {
  RepMatroid fano = pg(3, 2);
  for (const auto& l : flats(fano, 2)) {
    auto c = recognize_flat(fano, l.elements);
    EXPECT_EQ(c.kind, FlatKind::kProjectiveGeometry);
    EXPECT_EQ(c.name(), "ProjectiveGeometry(2)");
  }
  RepMatroid c5 = circuit_matroid(5, 2);
  EXPECT_EQ(recognize_flat(c5, c5.ground()).name(), "Circuit(5)");
  RepMatroid k4 = graphic(complete_graph(4));
  EXPECT_EQ(recognize_flat(k4, k4.ground()).kind, FlatKind::kGraphicK4);
  std::size_t triangles = 0;
  for (const auto& l : flats(k4, 2)) triangles += l.elements.size() == 3;
  EXPECT_EQ(triangles, 4u);
  expect_error(ErrorCode::kNotAFlat, [&] { recognize_flat(fano, fano.select(std::vector<std::string>{"001", "010"})); });
  EXPECT_FALSE(uniform(3, 5, 3));
  auto u = classify(*uniform(3, 5, 4));
  EXPECT_EQ(u.kind, FlatKind::kUniform);
  EXPECT_EQ(u.name(), "Uniform(3,5)");
  auto c4 = classify(circuit_matroid(4, 2));
  ASSERT_TRUE(c4.uniform);  // secondary tag: also U3,4
  EXPECT_EQ(*c4.uniform, std::make_pair(std::size_t{3}, std::size_t{4}));
  EXPECT_EQ(classify(dual_k33()).kind, FlatKind::kDualK33);
  EXPECT_EQ(classify(s8()).kind, FlatKind::kOther);
}

TEST(IsChordal, Examples) {
  EXPECT_TRUE(is_chordal(pg(3, 2)).chordal);
  auto c4 = circuit_matroid(4, 2);
  auto r = is_chordal(c4);
  EXPECT_FALSE(r.chordal);
  ASSERT_TRUE(r.bad_flat);
  EXPECT_EQ(*r.bad_flat, c4.ground());
  EXPECT_FALSE(is_chordal(graphic(wheel_graph(4))).chordal);
  EXPECT_FALSE(is_chordal_circuitsplit(c4));
  EXPECT_TRUE(is_chordal_circuitsplit(pg(4, 2)));
}

TEST(IsChordal, AgreesWithDefinitionOnBinaryCatalog) {
  for (const auto& m : binary_catalog()) {
    bool expected = chordal_by_definition(m);
    EXPECT_EQ(is_chordal(m).chordal, expected);
    EXPECT_EQ(is_chordal_circuitsplit(m), expected);
    EXPECT_EQ(!has_induced_minor(m, kC4).has_value(), expected);
  }
}

TEST(IsChordal, AgreesWithDefinitionOverLargerFields) {
  std::mt19937 rng(9);
  for (int q : {3, 4, 5}) {
    RepMatroid space = pg(3, q);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::size_t> idx(space.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(3 + rng() % 6);
      RepMatroid m = restriction(space, ElementSet::of(space.size(), idx));
      EXPECT_EQ(is_chordal(m).chordal, chordal_by_definition(m)) << describe_member(m);
    }
  }
  // A 4-circuit over GF(3) with nothing else has no split.
  EXPECT_FALSE(is_chordal(circuit_matroid(4, 3)).chordal);
  EXPECT_TRUE(is_chordal(pg(3, 3)).chordal);
}

TEST(InducedRestrictions, Examples) {
  std::vector<Edge> k5e = complete_graph(5);
  k5e.pop_back();
  EXPECT_FALSE(induced_restrictions(graphic(k5e), kK4).empty());
  EXPECT_FALSE(induced_restrictions(dual(pg(3, 2)), kC4).empty());
  EXPECT_TRUE(induced_restrictions(pg(3, 2), forbidden_family(2, Route::kRestriction)).empty());
  EXPECT_TRUE(induced_restrictions(pg(4, 2), forbidden_family(2, Route::kRestriction)).empty());
  for (const auto& w : induced_restrictions(graphic(wheel_graph(4)), kC4)) {
    EXPECT_TRUE(w.contracted.empty());
    EXPECT_EQ(w.kind, WitnessKind::kInducedRestriction);
  }
}

TEST(InducedMinor, Examples) {
  auto w = has_induced_minor(graphic(wheel_graph(4)), kC4);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->contracted.empty());
  RepMatroid ff = fano_fano();
  for (std::size_t e = 0; e < ff.size(); ++e) {
    auto con = contract_simplify(ff, ElementSet(ff.size(), {e}));
    EXPECT_NE(classify(con.matroid).kind, FlatKind::kGraphicK4);
  }
  for (std::size_t r = 1; r <= 4; ++r) EXPECT_FALSE(has_induced_minor(pg(r, 2), forbidden_family(2, Route::kMinor)));
  // M(K4) shows up after contracting in the rank-4 wheel's big relative.
  EXPECT_TRUE(has_induced_minor(graphic(complete_graph(5)), kK4));
}

TEST(InducedMinor, WitnessesReplay) {
  Family all{"all", {FamilyPattern::circuits_from(3), FamilyPattern::graphic_k4(), FamilyPattern::dual_k33()}};
  std::size_t checked = 0;
  for (const auto& m : binary_catalog()) {
    for_each_induced_minor(m, all, [&](const Witness& w) {
      EXPECT_EQ(classify(replay_witness(m, w)), w.classification);
      EXPECT_TRUE(is_independent(m, m.select(w.contracted)));
      ++checked;
      return true;
    });
  }
  EXPECT_GT(checked, 100u);
}

TEST(InducedMinor, SpanShortcutMatchesExhaustiveSearch) {
  std::vector<Family> fams = {kC4, kK4, forbidden_family(2, Route::kMinor)};
  for (const auto& m : binary_catalog()) {
    if (m.size() > 11) continue;
    for (const auto& fam : fams) EXPECT_EQ(has_induced_minor(m, fam).has_value(), has_minor_exhaustive(m, fam));
  }
  for (const auto& m : catalog_universe(3, 3).members) {
    if (m.size() > 9) continue;
    Family fam = forbidden_family(3, Route::kMinor);
    EXPECT_EQ(has_induced_minor(m, fam).has_value(), has_minor_exhaustive(m, fam));
  }
}

TEST(ForbiddenFamily, Examples) {
  EXPECT_EQ(forbidden_family(2, Route::kMinor).describe(), "{M(C4), M(K4)}");
  EXPECT_EQ(forbidden_family(3, Route::kMinor).describe(), "{U2,3}");
  EXPECT_EQ(forbidden_family(4, Route::kMinor).describe(), "{U2,3, U2,4, U3,6}");
  EXPECT_EQ(forbidden_family(2, Route::kRestriction).describe(), "{M(Cn:n>=4), M(K4), M*(K33)}");
  EXPECT_EQ(forbidden_family(3, Route::kRestriction).describe(), "{M(Cn:n>=3)}");
  EXPECT_EQ(forbidden_family(4, Route::kRestriction).describe(), "{M(Cn:n>=3), U2,4, U3,5, U3,6}");
  EXPECT_EQ(forbidden_family(5, Route::kRestriction).describe(), "{M(Cn:n>=3), U2,4, U3,5, U4,6, U2,5, U3,6}");
  expect_error(ErrorCode::kUnsupportedOrder, [] { forbidden_family(6, Route::kMinor); });
}

TEST(GfqChordal, Examples) {
  const ChordalMethod methods[] = {ChordalMethod::kMinor, ChordalMethod::kRestriction, ChordalMethod::kPeo,
                                   ChordalMethod::kDecompose};
  for (auto method : methods) {
    for (std::size_t r = 1; r <= 4; ++r) EXPECT_TRUE(is_gfq_chordal(pg(r, 2), method).chordal);
    EXPECT_FALSE(is_gfq_chordal(graphic(complete_graph(4)), method).chordal);
    EXPECT_TRUE(is_gfq_chordal(fano_fano(), method).chordal);
    EXPECT_TRUE(is_gfq_chordal(pg(3, 3), method).chordal);
    EXPECT_FALSE(is_gfq_chordal(circuit_matroid(3, 3), method).chordal);
  }
  auto neg = is_gfq_chordal(graphic(complete_graph(4)), ChordalMethod::kMinor);
  ASSERT_TRUE(neg.witness);
  EXPECT_EQ(neg.witness->classification.kind, FlatKind::kGraphicK4);
  EXPECT_TRUE(is_gfq_chordal(fano_fano(), ChordalMethod::kPeo).peo);
  EXPECT_TRUE(is_gfq_chordal(fano_fano(), ChordalMethod::kDecompose).tree);
  EXPECT_EQ(parse_method("peo"), ChordalMethod::kPeo);
  EXPECT_FALSE(parse_method("nope"));
}

TEST(LargestCircuit, Examples) {
  EXPECT_EQ(largest_circuit_induced_minor(circuit_matroid(5, 2)), 5u);
  EXPECT_EQ(largest_circuit_induced_restriction(circuit_matroid(5, 2)), 5u);
  EXPECT_EQ(largest_circuit_induced_minor(pg(3, 2)), 0u);
  EXPECT_EQ(largest_circuit_induced_restriction(pg(3, 2)), 0u);
  for (const auto& m : binary_catalog()) {
    std::size_t n = largest_circuit_induced_minor(m);
    if (n >= 4) {
      EXPECT_EQ(largest_circuit_induced_restriction(m), n);
    }
  }
}

TEST(ContractionProperties, ContractionHypothesesAreExercised) {
  // The implication checks are only meaningful if their hypotheses occur.
  std::size_t k4_hits = 0, k33_hits = 0, arc_hits = 0;
  for (const auto& m : binary_catalog()) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      auto con = contract_simplify(m, ElementSet(m.size(), {e}));
      k4_hits += !induced_restrictions(con.matroid, kK4).empty();
    }
  }
  for (const auto& m : dual_k33_extensions(20, 3, 1).members) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      auto con = contract_simplify(m, ElementSet(m.size(), {e}));
      k33_hits += has_induced_minor(con.matroid, Family{"k33", {FamilyPattern::dual_k33()}}).has_value();
    }
  }
  for (const auto& m : ternary_arc_lifts(20, 1).members) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      auto c = classify(contract_simplify(m, ElementSet(m.size(), {e})).matroid);
      arc_hits += c.uniform && c.uniform->first == 3 && c.uniform->second == 4;
    }
  }
  EXPECT_GT(k4_hits, 0u);
  EXPECT_GT(k33_hits, 0u);
  EXPECT_GT(arc_hits, 0u);
}

TEST(ContractionProperties, InducedMinorReadingFailsAboveRankThree) {
  // U4,5 over GF(3): M/e is U3,4, which has U2,3 as an induced minor, yet M
  // has no U2,3 or U3,4 flat. The u2k-contraction property therefore needs the
  // induced-restriction reading once r(M) > 3; rank <= 3 is unaffected.
  RepMatroid m = circuit_matroid(5, 3);
  auto con = contract_simplify(m, ElementSet(m.size(), {0}));
  EXPECT_TRUE(has_induced_minor(con.matroid, Family{"u23", {FamilyPattern::uniform(2, 3)}}));
  Family conclusion{"c", {FamilyPattern::uniform(2, 3), FamilyPattern::uniform(3, 4)}};
  EXPECT_TRUE(induced_restrictions(m, conclusion).empty());
  EXPECT_FALSE(checks::u2k_contraction(m));
}

}  // namespace
