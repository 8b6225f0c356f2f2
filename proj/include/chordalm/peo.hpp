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
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chordalm/element_set.hpp"
#include "chordalm/error.hpp"
#include "chordalm/matroid.hpp"
#include "chordalm/projective.hpp"

namespace chordalm {

/// A perfect elimination ordering of cocircuits C_1*, ..., C_r*, with the
/// closure of each C_i* in M_i = M \ (C_1* u ... u C_{i-1}*) and its rank.
struct PeoCertificate {
  std::vector<std::vector<std::string>> cocircuits;
  std::vector<std::vector<std::string>> closures;
  std::vector<std::size_t> closure_ranks;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& c : cocircuits) out.push_back(c.size());
    return out;
  }
};

struct PeoSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  std::uint64_t memo_hits = 0;
};

/// |F| = (q^r(F) - 1) / (q - 1).
inline bool is_projective_flat(const RepMatroid& m, const ElementSet& f) {
  if (!is_flat(m, f)) throw Error(ErrorCode::kNotAFlat, "is_projective_flat needs a flat");
  return f.size() == pg_point_count(rank_of(m, f), m.q());
}

namespace detail {

struct PeoChoice {
  ElementSet cocircuit;  // indices of m
  ElementSet closure;
  std::size_t closure_rank;
};

/// Cocircuits of m|remaining whose closure there is a projective geometry,
/// largest closure rank first.
inline std::vector<PeoChoice> peo_choices(const RepMatroid& m, const ElementSet& remaining) {
  RepMatroid sub = restriction(m, remaining);
  std::vector<std::size_t> back = remaining.members();
  auto lift = [&](const ElementSet& s) {
    ElementSet out(m.size());
    s.for_each([&](std::size_t i) { out.insert(back[i]); });
    return out;
  };
  std::vector<PeoChoice> out;
  for (const auto& h : hyperplanes(sub)) {
    ElementSet c = h.elements.complement();
    ElementSet cl = closure(sub, c);
    std::size_t r = rank_of(sub, cl);
    if (cl.size() != pg_point_count(r, m.q())) continue;
    out.push_back({lift(c), lift(cl), r});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PeoChoice& a, const PeoChoice& b) { return a.closure_rank > b.closure_rank; });
  return out;
}

}  // namespace detail

/// Backtracking search for a perfect elimination ordering of cocircuits.
/// Remaining ground sets already known to dead-end are memoized.
inline std::optional<PeoCertificate> find_peo(const RepMatroid& m, PeoSearchStats* stats = nullptr) {
  PeoSearchStats local;
  PeoSearchStats& st = stats ? *stats : local;
  std::set<ElementSet> dead;
  std::vector<detail::PeoChoice> path;
  auto search = [&](auto&& self, const ElementSet& remaining) -> bool {
    ++st.nodes;
    if (remaining.empty()) return true;
    if (dead.count(remaining)) {
      ++st.memo_hits;
      return false;
    }
    for (auto& choice : detail::peo_choices(m, remaining)) {
      ElementSet rest = remaining - choice.cocircuit;
      path.push_back(std::move(choice));
      if (self(self, rest)) return true;
      path.pop_back();
      ++st.backtracks;
    }
    dead.insert(remaining);
    return false;
  };
  if (!search(search, m.ground())) return std::nullopt;
  PeoCertificate cert;
  for (const auto& step : path) {
    cert.cocircuits.push_back(m.labels_of(step.cocircuit));
    cert.closures.push_back(m.labels_of(step.closure));
    cert.closure_ranks.push_back(step.closure_rank);
  }
  return cert;
}

struct PeoVerification {
  bool ok = true;
  std::optional<std::size_t> failing_step;  // 0-based
  std::string reason;
};

/// Checks each step of a certificate. Throws MalformedCertificate when the
/// cocircuits do not partition E(M) into r(M) parts.
inline PeoVerification verify_peo(const RepMatroid& m, const PeoCertificate& cert) {
  std::size_t r = matroid_rank(m);
  if (cert.cocircuits.size() != r) {
    throw Error(ErrorCode::kMalformedCertificate, "certificate has " + std::to_string(cert.cocircuits.size()) +
                                                      " steps, expected " + std::to_string(r));
  }
  std::vector<ElementSet> steps;
  ElementSet seen(m.size());
  for (const auto& labels : cert.cocircuits) {
    ElementSet s(m.size());
    for (const auto& l : labels) {
      auto i = m.find_label(l);
      if (!i) throw Error(ErrorCode::kMalformedCertificate, "unknown label " + l);
      if (s.contains(*i) || seen.contains(*i)) throw Error(ErrorCode::kMalformedCertificate, "label " + l + " repeated");
      s.insert(*i);
    }
    seen |= s;
    steps.push_back(std::move(s));
  }
  if (seen != m.ground()) throw Error(ErrorCode::kMalformedCertificate, "cocircuits do not cover the ground set");

  ElementSet remaining = m.ground();
  for (std::size_t i = 0; i < r; ++i) {
    auto fail = [&](std::string why) { return PeoVerification{false, i, std::move(why)}; };
    const ElementSet& c = steps[i];
    // E(M_i) is a flat of M of rank r(M) - i.
    if (!is_flat(m, remaining) || rank_of(m, remaining) != r - i) {
      return fail("remaining ground set is not a flat of rank " + std::to_string(r - i));
    }
    ElementSet h = remaining - c;
    RepMatroid sub = restriction(m, remaining);
    std::vector<std::size_t> pos = remaining.members();
    auto local = [&](const ElementSet& s) {
      ElementSet out(sub.size());
      for (std::size_t j = 0; j < pos.size(); ++j)
        if (s.contains(pos[j])) out.insert(j);
      return out;
    };
    ElementSet h_local = local(h);
    if (c.empty() || !is_flat(sub, h_local) || rank_of(sub, h_local) + 1 != r - i) {
      return fail("not a cocircuit of the remaining matroid");
    }
    ElementSet cl_local = closure(sub, local(c));
    std::size_t cl_rank = rank_of(sub, cl_local);
    if (cl_local.size() != pg_point_count(cl_rank, m.q())) {
      return fail("closure of the cocircuit is not a projective geometry");
    }
    // M|cl_{M_i}(C_i*) = M_i|cl_{M_i}(C_i*): the closure in M_i is closed in M.
    ElementSet cl_global(m.size());
    cl_local.for_each([&](std::size_t j) { cl_global.insert(pos[j]); });
    if (closure(m, c) != cl_global) return fail("closure in M differs from closure in M_i");
    remaining -= c;
  }
  return {};
}

}  // namespace chordalm
