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
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "chordalm/chordality.hpp"
#include "chordalm/constructions.hpp"
#include "chordalm/decompose.hpp"
#include "chordalm/detect.hpp"
#include "chordalm/error.hpp"
#include "chordalm/matroid.hpp"
#include "chordalm/peo.hpp"
#include "chordalm/projective.hpp"

namespace chordalm {

inline constexpr std::string_view kVersion = "chordalm 1.0.0";

/// FNV-1a of the version string, stamped on catalog records.
inline std::string code_hash() {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : kVersion) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 15];
  return s;
}

struct Predicates {
  bool chordal = false;
  bool gfq_minor = false;
  bool gfq_restriction = false;
  bool gfq_peo = false;
  bool gfq_decompose = false;
  bool round = false;
};

/// One projective-equivalence class of simple restrictions of PG(r-1, q).
/// `points` is the lexicographically least sorted image of the class under
/// PGL(r, q).
struct CatalogRecord {
  int q = 2;
  std::size_t r = 0;
  std::size_t n = 0;
  std::vector<Vec> points;
  std::optional<Predicates> predicates;
  std::string code_hash;

  RepMatroid matroid() const { return RepMatroid(gf(q), r, points); }
};

struct EnumerateOptions {
  bool spanning = false;
  std::size_t min_size = 0;
  std::size_t max_size = std::numeric_limits<std::size_t>::max();
};

/// (r <= 4, q = 2), (r <= 3, q = 3) and (r <= 2, any supported q).
inline bool enumeration_feasible(std::size_t r, int q) {
  if (!is_supported_order(q)) return false;
  if (q == 2) return r <= 4;
  if (q == 3) return r <= 3;
  return r <= 2;
}

namespace detail {

/// Mask order matching lex order of increasing index lists of equal size.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

}  // namespace detail

/// Calls fn(record) once per orbit of PGL(r, q) on subsets of PG(r-1, q)
/// meeting the options, in increasing order of the first subset (as a
/// bitmask) met in each orbit.
inline void enumerate_each(std::size_t r, int q, const EnumerateOptions& opts,
                           const std::function<void(CatalogRecord&&)>& fn) {
  if (!enumeration_feasible(r, q)) {
    throw Error(ErrorCode::kInfeasibleUniverse, "cannot enumerate rank " + std::to_string(r) + " over GF(" +
                                                    std::to_string(q) + ")");
  }
  const ProjectiveGroup& group = ProjectiveGroup::get(r, q);
  const ProjectiveSpace& space = group.space();
  std::size_t n = space.size();
  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> visited(total, false);
  std::string hash = code_hash();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (visited[mask]) continue;
    std::uint64_t best = mask;
    for (std::size_t g = 0; g < std::max<std::size_t>(group.order(), 1); ++g) {
      std::uint64_t img = 0;
      if (group.order() == 0) {
        img = mask;
      } else {
        const std::uint8_t* perm = group.perm(g);
        for (std::uint64_t w = mask; w; w &= w - 1) img |= std::uint64_t{1} << perm[std::countr_zero(w)];
      }
      visited[img] = true;
      if (detail::mask_lex_less(img, best)) best = img;
    }
    std::size_t size = static_cast<std::size_t>(std::popcount(best));
    if (size < opts.min_size || size > opts.max_size) continue;
    CatalogRecord rec;
    rec.q = q;
    rec.r = r;
    rec.n = size;
    for (std::uint64_t w = best; w; w &= w - 1) rec.points.push_back(space.point(std::countr_zero(w)));
    rec.code_hash = hash;
    if (opts.spanning && matroid_rank(rec.matroid()) != r) continue;
    fn(std::move(rec));
  }
}

inline std::vector<CatalogRecord> enumerate(std::size_t r, int q, const EnumerateOptions& opts = {}) {
  std::vector<CatalogRecord> out;
  enumerate_each(r, q, opts, [&](CatalogRecord&& rec) { out.push_back(std::move(rec)); });
  return out;
}

inline Predicates compute_predicates(const RepMatroid& m) {
  Predicates p;
  p.chordal = is_chordal(m).chordal;
  p.gfq_minor = is_gfq_chordal(m, ChordalMethod::kMinor).chordal;
  p.gfq_restriction = is_gfq_chordal(m, ChordalMethod::kRestriction).chordal;
  p.gfq_peo = is_gfq_chordal(m, ChordalMethod::kPeo).chordal;
  p.gfq_decompose = is_gfq_chordal(m, ChordalMethod::kDecompose).chordal;
  p.round = is_round(m);
  return p;
}

inline void annotate(CatalogRecord& rec) { rec.predicates = compute_predicates(rec.matroid()); }

// ---------------------------------------------------------------------------
// Universes and verification.

struct Universe {
  std::string description;
  std::vector<RepMatroid> members;
};

/// Spanning classes of every rank from 0 to max_rank.
inline Universe catalog_universe(int q, std::size_t max_rank, EnumerateOptions opts = {}) {
  opts.spanning = true;
  Universe u;
  u.description = "spanning simple GF(" + std::to_string(q) + ") classes of rank <= " + std::to_string(max_rank);
  for (std::size_t r = 0; r <= max_rank; ++r) {
    enumerate_each(r, q, opts, [&](CatalogRecord&& rec) { u.members.push_back(rec.matroid()); });
  }
  return u;
}

/// Spanning classes of exactly rank r.
inline Universe rank_universe(int q, std::size_t r, EnumerateOptions opts = {}) {
  opts.spanning = true;
  Universe u;
  u.description = "spanning simple GF(" + std::to_string(q) + ") classes of rank " + std::to_string(r);
  if (opts.min_size > 0 || opts.max_size != std::numeric_limits<std::size_t>::max()) {
    u.description += " with " + std::to_string(opts.min_size) + " <= |E| <= " +
                     (opts.max_size == std::numeric_limits<std::size_t>::max() ? std::string("inf")
                                                                                : std::to_string(opts.max_size));
  }
  enumerate_each(r, q, opts, [&](CatalogRecord&& rec) { u.members.push_back(rec.matroid()); });
  return u;
}

/// Random subsets of PG(r-1, q) with sizes in [lo, hi].
inline Universe random_subsets(int q, std::size_t r, std::size_t count, std::size_t lo, std::size_t hi,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RepMatroid space = pg(r, q);
  Universe u;
  u.description = std::to_string(count) + " random subsets of PG(" + std::to_string(r - 1) + "," +
                  std::to_string(q) + ") of size " + std::to_string(lo) + ".." + std::to_string(hi) +
                  " (seed " + std::to_string(seed) + ")";
  std::vector<std::size_t> idx(space.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t size = std::uniform_int_distribution<std::size_t>(lo, std::min(hi, idx.size()))(rng);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::size_t> pick(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(pick.begin(), pick.end());
    u.members.push_back(restriction(space, ElementSet::of(space.size(), pick)));
  }
  return u;
}

/// Rank-5 binary matroids M with a point e = 00001 such that si(M/e) contains
/// M*(K_{3,3}): each point z of the fixture is lifted to z, z + e or both,
/// then up to `noise` further random points are added.
inline Universe dual_k33_extensions(std::size_t count, std::size_t noise, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RepMatroid base = dual_k33();
  Universe u;
  u.description = std::to_string(count) + " rank-5 binary extensions of M*(K33) by a cone point (seed " +
                  std::to_string(seed) + ")";
  Vec e = {0, 0, 0, 0, 1};
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Vec> pts{e};
    for (const auto& z : base.points()) {
      Vec lifted = z;
      lifted.push_back(0);
      Vec coned = lifted;
      coned[4] = 1;
      int choice = std::uniform_int_distribution<int>(0, 2)(rng);
      if (choice != 1) pts.push_back(lifted);
      if (choice != 0) pts.push_back(coned);
    }
    RepMatroid m(gf(2), 5, pts);
    std::size_t extra = std::uniform_int_distribution<std::size_t>(0, noise)(rng);
    RepMatroid space = pg(5, 2);
    std::vector<Vec> add;
    for (std::size_t t = 0; t < extra; ++t) {
      const Vec& p = space.point(std::uniform_int_distribution<std::size_t>(0, space.size() - 1)(rng));
      if (!m.find_point(p) && std::find(add.begin(), add.end(), p) == add.end()) add.push_back(p);
    }
    u.members.push_back(add_points(m, add));
  }
  return u;
}

/// Rank-4 ternary matroids M with e = 0001 whose contraction by e tends to be
/// the 4-arc U_{3,4}: each frame point x of PG(2,3) is lifted to a random
/// nonempty subset of {x, x + e, x + 2e}; sometimes one noise point is added.
inline Universe ternary_arc_lifts(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FieldSpec& f = gf(3);
  Universe u;
  u.description = std::to_string(count) + " rank-4 ternary lifts of a 4-arc through a cone point (seed " +
                  std::to_string(seed) + ")";
  std::vector<Vec> frame = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}};
  RepMatroid space = pg(4, 3);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Vec> pts{{0, 0, 0, 1}};
    for (const auto& x : frame) {
      int mask = std::uniform_int_distribution<int>(1, 7)(rng);
      for (int lam = 0; lam < 3; ++lam) {
        if (!(mask >> lam & 1)) continue;
        Vec p = x;
        p[3] = static_cast<Elem>(lam);
        pts.push_back(normalize(f, p));
      }
    }
    RepMatroid m(f, 4, pts);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      const Vec& p = space.point(std::uniform_int_distribution<std::size_t>(0, space.size() - 1)(rng));
      if (!m.find_point(p)) m = add_points(m, {p});
    }
    u.members.push_back(std::move(m));
  }
  return u;
}

inline Universe concat(Universe a, const Universe& b) {
  a.description += " + " + b.description;
  a.members.insert(a.members.end(), b.members.begin(), b.members.end());
  return a;
}

struct VerificationReport {
  std::string check;
  std::string universe;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::vector<std::string> counterexamples;  // canonical digit strings and reason
  double elapsed_ms = 0;

  std::size_t universe_size() const { return pass + fail; }
  bool ok() const { return fail == 0; }
};

/// A member check returns a failure reason, or nothing when the member passes.
using MemberCheck = std::function<std::optional<std::string>(const RepMatroid&)>;

inline std::size_t thread_budget() {
  const char* env = std::getenv("CHORDALM_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<std::size_t>(v);
}

inline std::string describe_member(const RepMatroid& m) {
  std::string s = "q=" + std::to_string(m.q()) + " r=" + std::to_string(m.ambient_rank()) + " {";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + to_digits(m.point(i));
  return s + "}";
}

/// Runs the check on every member, in parallel across CHORDALM_THREADS
/// workers; counterexamples are reported in universe order.
inline VerificationReport run_check(const std::string& id, const Universe& universe, const MemberCheck& check) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<std::string>> results(universe.members.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    while (true) {
      std::size_t i = next++;
      if (i >= universe.members.size()) return;
      try {
        results[i] = check(universe.members[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::size_t threads = std::min(thread_budget(), std::max<std::size_t>(universe.members.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  VerificationReport report;
  report.check = id;
  report.universe = universe.description;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i]) {
      ++report.fail;
      report.counterexamples.push_back(describe_member(universe.members[i]) + ": " + *results[i]);
    } else {
      ++report.pass;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace checks {

inline std::string flag(bool b) { return b ? "1" : "0"; }

inline Family gf2_small_family() {
  return {"c4-k4-k33", {FamilyPattern::circuit(4), FamilyPattern::graphic_k4(), FamilyPattern::dual_k33()}};
}

/// GF(q)-chordal by decomposition, by excluded induced minors and by excluded
/// induced restrictions all agree; with_peo adds the cocircuit ordering.
inline MemberCheck characterizations(bool with_peo) {
  return [with_peo](const RepMatroid& m) -> std::optional<std::string> {
    bool dec = is_gfq_chordal(m, ChordalMethod::kDecompose).chordal;
    bool minor = is_gfq_chordal(m, ChordalMethod::kMinor).chordal;
    bool restr = is_gfq_chordal(m, ChordalMethod::kRestriction).chordal;
    bool peo = with_peo ? is_gfq_chordal(m, ChordalMethod::kPeo).chordal : minor;
    if (dec == minor && minor == restr && restr == peo) return std::nullopt;
    return "decompose=" + flag(dec) + " minor=" + flag(minor) + " restriction=" + flag(restr) +
           (with_peo ? " peo=" + flag(peo) : "");
  };
}

inline std::optional<std::string> peo_matches_minor(const RepMatroid& m) {
  auto cert = find_peo(m);
  bool minor = is_gfq_chordal(m, ChordalMethod::kMinor).chordal;
  if (cert && !verify_peo(m, *cert).ok) return "find_peo returned an invalid certificate";
  if (cert.has_value() == minor) return std::nullopt;
  return "peo=" + flag(cert.has_value()) + " minor=" + flag(minor);
}

inline std::optional<std::string> chordal_equivalence(const RepMatroid& m) {
  bool flat_route = is_chordal(m).chordal;
  bool split = is_chordal_circuitsplit(m);
  bool no_c4_minor = !has_induced_minor(m, Family{"c4", {FamilyPattern::circuit(4)}});
  bool no_big_circuit_flat = induced_restrictions(m, Family{"c>=4", {FamilyPattern::circuits_from(4)}}).empty();
  if (flat_route == split && split == no_c4_minor && no_c4_minor == no_big_circuit_flat) return std::nullopt;
  return "flats=" + flag(flat_route) + " circuit-split=" + flag(split) + " no-C4-minor=" + flag(no_c4_minor) +
         " no-circuit-flat=" + flag(no_big_circuit_flat);
}

inline std::optional<std::string> largest_circuit(const RepMatroid& m) {
  std::size_t n = largest_circuit_induced_minor(m);
  if (n < 4) return std::nullopt;
  std::size_t r = largest_circuit_induced_restriction(m);
  if (r == n) return std::nullopt;
  return "largest circuit induced minor " + std::to_string(n) + " but largest circuit flat " + std::to_string(r);
}

inline std::optional<std::string> guts_rank(const RepMatroid& m) {
  if (!is_chordal(m).chordal) return std::nullopt;
  auto report = check_guts_rank(m);
  if (report.violations.empty()) return std::nullopt;
  const auto& v = report.violations.front();
  return "exact vertical " + std::to_string(v.k) + "-separation with guts rank " + std::to_string(rank_of(m, v.guts));
}

inline std::optional<std::string> modular_guts(const RepMatroid& m) {
  if (!is_chordal(m).chordal) return std::nullopt;
  for (const auto& sep : vertical_separations(m)) {
    if (modular_side(m, sep) == ModularSide::kNeither) {
      return "guts of an exact vertical " + std::to_string(sep.k) + "-separation is modular on neither side";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> rank4_large(const RepMatroid& m) {
  bool small_restriction = !induced_restrictions(m, Family{"c4-k4", {FamilyPattern::circuit(4), FamilyPattern::graphic_k4()}}).empty();
  bool k4_minor = has_induced_minor(m, Family{"k4", {FamilyPattern::graphic_k4()}}).has_value();
  if (small_restriction || !k4_minor) return std::nullopt;
  return "M(K4) induced minor without an M(C4) or M(K4) induced restriction";
}

/// If si(M/e) has a member of `trigger` as an induced restriction for some e,
/// M has a member of `conclusion` as an induced restriction.
inline MemberCheck single_contraction(Family trigger, Family conclusion, bool trigger_by_minor) {
  return [=](const RepMatroid& m) -> std::optional<std::string> {
    bool concluded = false;
    bool evaluated = false;
    for (std::size_t e = 0; e < m.size(); ++e) {
      Contraction con = contract_simplify(m, ElementSet(m.size(), {e}));
      bool hit = trigger_by_minor ? has_induced_minor(con.matroid, trigger).has_value()
                                  : !induced_restrictions(con.matroid, trigger).empty();
      if (!hit) continue;
      if (!evaluated) {
        concluded = !induced_restrictions(m, conclusion).empty();
        evaluated = true;
      }
      if (!concluded) return "si(M/" + m.label(e) + ") has " + trigger.describe() + " but M has no " + conclusion.describe();
    }
    return std::nullopt;
  };
}

/// The excluded-restriction family is closed under single-element
/// extensions (if si(M/e) is in it then M has a member as an induced
/// restriction) and excluding its induced-minor-minimal members as induced
/// minors is the same as excluding it as induced restrictions.
inline std::optional<std::string> ir_equals_im(const RepMatroid& m) {
  Family full = forbidden_family(m.q(), Route::kRestriction);
  Family minimal = forbidden_family(m.q(), Route::kMinor);
  bool has_restriction = !induced_restrictions(m, full).empty();
  for (std::size_t e = 0; e < m.size() && !has_restriction; ++e) {
    Contraction con = contract_simplify(m, ElementSet(m.size(), {e}));
    if (full.matches(classify(con.matroid))) return "si(M/" + m.label(e) + ") is in the family but M has no member as a flat";
  }
  bool has_minor = has_induced_minor(m, minimal).has_value();
  if (has_minor == has_restriction) return std::nullopt;
  return "induced minor " + flag(has_minor) + " but induced restriction " + flag(has_restriction);
}

/// For 3 <= n <= q: if si(M/e) has U_{2,n} as an induced restriction, M has a
/// member of {U_{2,k}: 3 <= k <= q} + {U_{3,n+1}} as an induced restriction.
inline std::optional<std::string> u2k_contraction(const RepMatroid& m) {
  std::size_t q = static_cast<std::size_t>(m.q());
  for (std::size_t n = 3; n <= q; ++n) {
    Family conclusion{"u2k-u3n1", {}};
    for (std::size_t k = 3; k <= q; ++k) conclusion.patterns.push_back(FamilyPattern::uniform(2, k));
    conclusion.patterns.push_back(FamilyPattern::uniform(3, n + 1));
    auto r = single_contraction(Family{"u2n", {FamilyPattern::uniform(2, n)}}, conclusion, false)(m);
    if (r) return r;
  }
  return std::nullopt;
}

/// If si(M/e) is U_{r,n} with 2 < r < n, M has a member of
/// {U_{2+t,k+t}: 3 <= k <= q, 0 <= t <= q-3} + {U_{r,n}, U_{r+1,n+1}} as an
/// induced restriction.
inline std::optional<std::string> urn_contraction(const RepMatroid& m) {
  std::size_t q = static_cast<std::size_t>(m.q());
  for (std::size_t e = 0; e < m.size(); ++e) {
    Contraction con = contract_simplify(m, ElementSet(m.size(), {e}));
    Classification c = classify(con.matroid);
    if (!c.uniform) continue;
    auto [r, n] = *c.uniform;
    if (!(2 < r && r < n)) continue;
    Family conclusion{"urn", {FamilyPattern::uniform(r, n), FamilyPattern::uniform(r + 1, n + 1)}};
    for (std::size_t k = 3; k <= q; ++k)
      for (std::size_t t = 0; t + 3 <= q; ++t) conclusion.patterns.push_back(FamilyPattern::uniform(2 + t, k + t));
    if (induced_restrictions(m, conclusion).empty()) {
      return "si(M/" + m.label(e) + ") is U" + std::to_string(r) + "," + std::to_string(n) + " but M has no " +
             conclusion.describe();
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> round_cocircuits(const RepMatroid& m) {
  bool a = is_round(m);
  bool b = every_cocircuit_spanning(m);
  if (a == b) return std::nullopt;
  return "no vertical separations=" + flag(a) + " every cocircuit spanning=" + flag(b);
}

}  // namespace checks

struct CheckOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

struct CheckSpec {
  std::string id;
  std::vector<std::string> aliases;
  std::string summary;
};

inline const std::vector<CheckSpec>& check_table() {
  static const std::vector<CheckSpec> table = {
      {"gf2-characterizations", {"thm-1.1"}, "decomposition, excluded induced minors and excluded induced restrictions agree (binary, rank <= 4)"},
      {"peo-equivalence", {"thm-1.4", "cor-4.2"}, "a perfect elimination ordering exists exactly for GF(2)-chordal classes (binary, rank <= 4)"},
      {"chordal-equivalence", {"thm-2.2"}, "chordal by flats = circuit splitting = no M(C4) induced minor = no circuit flat of size >= 4"},
      {"largest-circuit", {"lemma-2.1"}, "the largest circuit induced minor also occurs as a flat"},
      {"guts-rank", {"lemma-2.4"}, "exact vertical k-separations of chordal matroids have guts of rank k-1"},
      {"modular-guts", {"lemma-2.6"}, "guts of exact vertical separations of chordal matroids are modular on some side"},
      {"rank4-large", {"lemma-3.1"}, "rank-4 binary with 10..15 points: M(C4)/M(K4) flat or no M(K4) induced minor"},
      {"k4-contraction", {"lemma-3.2"}, "M(K4) flat in si(M/e) forces an M(C4), M(K4) or M*(K33) flat"},
      {"k33-contraction", {"lemma-3.3"}, "M*(K33) induced minor in si(M/e) forces an M(C4), M(K4) or M*(K33) flat (rank-5 samples)"},
      {"ir-im", {"lemma-3.4"}, "single-element closure of the restriction family, and minors vs restrictions"},
      {"gf3-characterizations", {"thm-3.5", "cor-gf3"}, "ternary rank <= 3: peo, no U2,3 induced minor, no circuit flat, decomposition agree"},
      {"gf4-characterizations", {"cor-gf4"}, "GF(4): rank <= 2 exhaustive plus sampled rank 3"},
      {"u2k-contraction", {"lemma-3.6"}, "ternary: U2,n flat in si(M/e) forces a U2,k or U3,n+1 flat"},
      {"urn-contraction", {"lemma-3.7"}, "ternary: si(M/e) = Ur,n forces a small uniform flat (rank-4 samples)"},
      {"round-cocircuits", {}, "no vertical separations = every cocircuit spanning (binary, rank <= 4)"},
      {"canonical-dedup", {}, "catalog classes are pairwise inequivalent and fixed by canonical_form (binary, rank <= 4)"},
  };
  return table;
}

inline std::optional<std::string> resolve_check(std::string_view id) {
  for (const auto& c : check_table()) {
    if (c.id == id) return c.id;
    for (const auto& a : c.aliases)
      if (a == id) return c.id;
  }
  return std::nullopt;
}

inline Universe default_universe(const std::string& id, const CheckOptions& opts) {
  if (id == "rank4-large") return rank_universe(2, 4, {false, 10, 15});
  if (id == "guts-rank" || id == "modular-guts") {
    Universe all = catalog_universe(2, 4);
    Universe u{"chordal members of " + all.description, {}};
    for (auto& m : all.members)
      if (is_chordal(m).chordal) u.members.push_back(std::move(m));
    return u;
  }
  if (id == "k4-contraction") return concat(catalog_universe(2, 4), random_subsets(2, 5, opts.samples, 6, 16, opts.seed));
  if (id == "k33-contraction") return dual_k33_extensions(opts.samples, 3, opts.seed);
  if (id == "gf3-characterizations" || id == "u2k-contraction") return catalog_universe(3, 3);
  if (id == "urn-contraction") return concat(catalog_universe(3, 3), ternary_arc_lifts(opts.samples, opts.seed));
  if (id == "gf4-characterizations") return concat(catalog_universe(4, 2), random_subsets(4, 3, opts.samples, 3, 12, opts.seed));
  return catalog_universe(2, 4);
}

inline MemberCheck member_check(const std::string& id) {
  if (id == "gf2-characterizations") return checks::characterizations(false);
  if (id == "peo-equivalence") return checks::peo_matches_minor;
  if (id == "chordal-equivalence") return checks::chordal_equivalence;
  if (id == "largest-circuit") return checks::largest_circuit;
  if (id == "guts-rank") return checks::guts_rank;
  if (id == "modular-guts") return checks::modular_guts;
  if (id == "rank4-large") return checks::rank4_large;
  if (id == "k4-contraction")
    return checks::single_contraction(Family{"k4", {FamilyPattern::graphic_k4()}}, checks::gf2_small_family(), false);
  if (id == "k33-contraction")
    return checks::single_contraction(Family{"k33", {FamilyPattern::dual_k33()}}, checks::gf2_small_family(), true);
  if (id == "ir-im") return checks::ir_equals_im;
  if (id == "gf3-characterizations" || id == "gf4-characterizations") return checks::characterizations(true);
  if (id == "u2k-contraction") return checks::u2k_contraction;
  if (id == "urn-contraction") return checks::urn_contraction;
  if (id == "round-cocircuits") return checks::round_cocircuits;
  throw Error(ErrorCode::kUnknownCheck, "unknown check " + id);
}

inline VerificationReport verify_dedup(const Universe& u) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "canonical-dedup";
  report.universe = u.description;
  std::map<std::vector<Vec>, std::size_t> forms;
  for (std::size_t i = 0; i < u.members.size(); ++i) {
    const RepMatroid& m = u.members[i];
    std::vector<Vec> form = canonical_form(m);
    std::optional<std::string> why;
    if (form != m.points()) why = "not a fixed point of canonical_form";
    if (!forms.emplace(form, i).second) why = "duplicate class";
    for (std::size_t j = 0; j < i && !why; ++j) {
      const RepMatroid& o = u.members[j];
      if (o.size() == m.size() && o.ambient_rank() == m.ambient_rank() && proj_equivalent(o, m)) {
        why = "projectively equivalent to an earlier class";
      }
    }
    if (why) {
      ++report.fail;
      report.counterexamples.push_back(describe_member(m) + ": " + *why);
    } else {
      ++report.pass;
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Runs a named check (ids or aliases from check_table()) on a universe.
inline VerificationReport verify(std::string_view check_id, const Universe& universe) {
  auto id = resolve_check(check_id);
  if (!id) throw Error(ErrorCode::kUnknownCheck, "unknown check " + std::string(check_id));
  if (*id == "canonical-dedup") return verify_dedup(universe);
  return run_check(*id, universe, member_check(*id));
}

inline VerificationReport verify(std::string_view check_id, const CheckOptions& opts = {}) {
  auto id = resolve_check(check_id);
  if (!id) throw Error(ErrorCode::kUnknownCheck, "unknown check " + std::string(check_id));
  return verify(*id, default_universe(*id, opts));
}

}  // namespace chordalm
