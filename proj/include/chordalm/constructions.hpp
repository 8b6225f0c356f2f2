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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chordalm/element_set.hpp"
#include "chordalm/error.hpp"
#include "chordalm/gfq.hpp"
#include "chordalm/matroid.hpp"
#include "chordalm/modularity.hpp"
#include "chordalm/projective.hpp"

namespace chordalm {

namespace detail {

inline Vec unit_vector(std::size_t rank, std::size_t i) {
  Vec v(rank, 0);
  v[i] = 1;
  return v;
}

inline std::string unique_label(std::string label, const std::set<std::string>& taken) {
  while (taken.count(label)) label += "'";
  return label;
}

}  // namespace detail

/// PG(rank-1, q): every normalized point, labelled by its digits.
inline RepMatroid pg(std::size_t rank, int q) {
  const FieldSpec& f = gf(q);
  std::vector<Vec> pts;
  for_each_projective_point(rank, q, [&](const Vec& v) { pts.push_back(v); });
  return RepMatroid(f, rank, std::move(pts));
}

/// U_{n-1,n} = M(C_n): e_1, ..., e_{n-1} and -(e_1 + ... + e_{n-1}).
inline RepMatroid circuit_matroid(std::size_t n, int q) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "circuit_matroid needs n >= 3");
  const FieldSpec& f = gf(q);
  std::size_t r = n - 1;
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < r; ++i) pts.push_back(detail::unit_vector(r, i));
  pts.push_back(normalize(f, Vec(r, f.neg(1))));
  return RepMatroid(f, r, std::move(pts));
}

using Edge = std::pair<int, int>;

inline std::vector<Edge> complete_graph(int n) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

inline std::vector<Edge> cycle_graph(int n) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) out.emplace_back(u, (u + 1) % n);
  return out;
}

/// Hub 0 joined to the rim cycle 1..n.
inline std::vector<Edge> wheel_graph(int n) {
  std::vector<Edge> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(0, i);
  for (int i = 1; i <= n; ++i) out.emplace_back(i, i % n + 1);
  return out;
}

inline std::vector<Edge> complete_bipartite_graph(int a, int b) {
  std::vector<Edge> out;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) out.emplace_back(u, a + v);
  return out;
}

/// Binary cycle matroid: edge uv is the column chi_u + chi_v, labelled "u-v",
/// then respanned to rank |V| - 1.
inline RepMatroid graphic(const std::vector<Edge>& edges) {
  int nv = 0;
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex");
    if (u == v) throw Error(ErrorCode::kNonSimpleGraph, "loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error(ErrorCode::kNonSimpleGraph, "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    nv = std::max({nv, u + 1, v + 1});
  }
  // Connectivity by union-find.
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(nv, false);
  for (auto [u, v] : edges) {
    parent[find(u)] = find(v);
    used[u] = used[v] = true;
  }
  for (int i = 0; i < nv; ++i) {
    if (!used[i] || find(i) != find(0)) throw Error(ErrorCode::kInvalidArgument, "graph must be connected");
  }
  std::vector<Vec> pts;
  std::vector<std::string> labels;
  for (auto [u, v] : edges) {
    Vec p(static_cast<std::size_t>(nv), 0);
    p[u] = 1;
    p[v] = 1;
    pts.push_back(std::move(p));
    labels.push_back(std::to_string(u) + "-" + std::to_string(v));
  }
  return respan(RepMatroid(gf(2), static_cast<std::size_t>(nv), std::move(pts), std::move(labels)));
}

/// M*(K_{3,3}) as e1..e4, e1+e2, e2+e3, e3+e4, e1+e4, e1+e2+e3+e4.
inline RepMatroid dual_k33() {
  std::vector<Vec> pts = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0},
      {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 1, 1},
  };
  return RepMatroid(gf(2), 4, std::move(pts));
}

/// Dual via standard form: if m = [I | A] up to column order, the dual is
/// [-A^T | I]. Labels are kept.
inline RepMatroid dual(const RepMatroid& m_in) {
  RepMatroid m = respan(m_in);
  const FieldSpec& f = m.field();
  std::size_t r = m.ambient_rank();
  std::size_t n = m.size();
  std::size_t d = n - r;
  RrefResult red = rref(Matrix::from_columns(f, r, m.points()));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  std::vector<Vec> cols(n, Vec(d, 0));
  for (std::size_t k = 0; k < d; ++k) cols[free_cols[k]][k] = 1;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = red.pivot_cols[i];
    for (std::size_t k = 0; k < d; ++k) cols[p][k] = f.neg(red.reduced(i, free_cols[k]));
  }
  std::set<Vec> seen;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(cols[j])) throw Error(ErrorCode::kDualNotSimple, "element " + m.label(j) + " is a coloop");
    cols[j] = normalize(f, cols[j]);
    if (!seen.insert(cols[j]).second) {
      throw Error(ErrorCode::kDualNotSimple, "element " + m.label(j) + " lies in a series pair");
    }
  }
  return RepMatroid(f, d, std::move(cols), m.labels());
}

/// AG(rank-1, q): the points of PG(rank-1, q) with first coordinate 1.
inline RepMatroid affine_geometry(std::size_t rank, int q) {
  if (rank < 1) throw Error(ErrorCode::kInvalidArgument, "affine geometry needs rank >= 1");
  const FieldSpec& f = gf(q);
  std::vector<Vec> pts;
  for_each_projective_point(rank, q, [&](const Vec& v) {
    if (v[0] == 1) pts.push_back(v);
  });
  return RepMatroid(f, rank, std::move(pts));
}

/// S_8 as [I_4 | 0111 1011 1101 1111]. Its complement in PG(3,2) is M(K_4)
/// plus a point off that plane, which is how S_8 differs from AG(3,2).
inline RepMatroid s8() {
  std::vector<Vec> pts = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
      {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1},
  };
  return RepMatroid(gf(2), 4, std::move(pts));
}

/// Search for U_{r,n} as n points of PG(r-1, q) with every r-subset
/// independent. Returns nothing once the search space is exhausted; throws
/// BudgetExceeded after `budget` search nodes. The first r + 1 points are
/// fixed to the standard frame, which every solution can be mapped onto.
inline std::optional<RepMatroid> uniform(std::size_t r, std::size_t n, int q,
                                         std::uint64_t budget = 10'000'000) {
  const FieldSpec& f = gf(q);
  if (n < r) throw Error(ErrorCode::kInvalidArgument, "uniform matroid needs r <= n");
  if (r == 0) {
    if (n == 0) return RepMatroid(f, 0, {});
    return std::nullopt;  // loops only
  }
  std::vector<Vec> chosen;
  for (std::size_t i = 0; i < r && i < n; ++i) chosen.push_back(detail::unit_vector(r, i));
  if (n <= r) return RepMatroid(f, r, std::move(chosen));
  if (r == 1) return std::nullopt;  // a second point would be parallel
  chosen.push_back(Vec(r, 1));
  if (n == r + 1) return RepMatroid(f, r, std::move(chosen));

  ProjectiveSpace space(f, r);
  std::vector<bool> in_use(space.size(), false);
  for (const auto& c : chosen) in_use[space.index_of(c)] = true;

  // p may join `chosen` iff it avoids the span of every (r-1)-subset.
  auto compatible = [&](const Vec& p) {
    std::vector<std::size_t> idx(r - 1);
    for (std::size_t i = 0; i < r - 1; ++i) idx[i] = i;
    while (true) {
      SpanBasis span(f, r);
      for (std::size_t i : idx) span.insert(chosen[i]);
      if (span.contains(p)) return false;
      std::size_t pos = r - 1;
      while (pos-- > 0) {
        if (idx[pos] != pos + chosen.size() - (r - 1)) break;
      }
      if (pos == static_cast<std::size_t>(-1)) return true;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < r - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == n) return true;
    if (++nodes > budget) {
      throw Error(ErrorCode::kBudgetExceeded, "uniform(" + std::to_string(r) + "," + std::to_string(n) + "," +
                                                  std::to_string(q) + ") search budget exhausted");
    }
    for (std::size_t i = start; i < space.size(); ++i) {
      if (in_use[i] || !compatible(space.point(i))) continue;
      chosen.push_back(space.point(i));
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return RepMatroid(f, r, std::move(chosen));
}

struct GluePairing {
  std::vector<std::pair<std::string, std::string>> pairs;
};

enum class GpcMode { kProjectiveGuts, kModularGuts };

/// Generalized parallel connection of m1 and m2 across the flats named by the
/// pairing. Both are placed in a common space of rank r1 + r2 - r(N) with the
/// glued flats identified pointwise; the result has E(m1) and then
/// E(m2) - N2 (relabelled with primes on clashes).
inline RepMatroid gpc(const RepMatroid& m1, const RepMatroid& m2, const GluePairing& glue, GpcMode mode) {
  if (m1.q() != m2.q()) throw Error(ErrorCode::kFieldMismatch, "gpc of matroids over different fields");
  const FieldSpec& f = m1.field();
  RepMatroid a = respan(m1);
  RepMatroid b = respan(m2);

  std::vector<std::size_t> left, right;
  for (const auto& [x, y] : glue.pairs) {
    left.push_back(a.index_of(x));
    right.push_back(b.index_of(y));
  }
  ElementSet n1 = ElementSet::of(a.size(), left);
  ElementSet n2 = ElementSet::of(b.size(), right);
  if (n1.size() != left.size() || n2.size() != right.size()) {
    throw Error(ErrorCode::kIncompatiblePairing, "glue pairing is not a bijection");
  }
  if (!is_flat(a, n1)) throw Error(ErrorCode::kNotAFlat, "glued set of the first matroid is not a flat");
  if (!is_flat(b, n2)) throw Error(ErrorCode::kNotAFlat, "glued set of the second matroid is not a flat");
  std::size_t k = rank_of(a, n1);
  if (rank_of(b, n2) != k) throw Error(ErrorCode::kIncompatiblePairing, "glued flats have different ranks");
  if (mode == GpcMode::kProjectiveGuts && n1.size() != pg_point_count(k, f.q)) {
    throw Error(ErrorCode::kNotProjectiveGuts, "glued flat is not a projective geometry");
  }
  if (mode == GpcMode::kModularGuts && !is_modular_flat(a, n1) && !is_modular_flat(b, n2)) {
    throw Error(ErrorCode::kNotModularGuts, "glued flat is modular in neither matroid");
  }

  // Linear isomorphism span(N1) -> span(N2): phi(b_i) = lambda_i * partner(b_i)
  // on a basis of N1, with lambda_0 = 1, consistent with every pair.
  std::vector<std::size_t> basis_pos;  // positions in glue.pairs
  {
    SpanBasis span(f, a.ambient_rank());
    for (std::size_t i = 0; i < left.size(); ++i)
      if (span.insert(a.point(left[i]))) basis_pos.push_back(i);
  }
  std::vector<Vec> basis1, partners;
  for (std::size_t i : basis_pos) {
    basis1.push_back(a.point(left[i]));
    partners.push_back(b.point(right[i]));
  }
  std::vector<Vec> coords1(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) solve_in_basis(f, basis1, a.point(left[i]), coords1[i]);

  std::vector<Elem> lambda(k, 1);
  std::optional<std::vector<Vec>> images;
  auto try_scalars = [&] {
    std::vector<Vec> img(k);
    for (std::size_t j = 0; j < k; ++j) {
      img[j] = partners[j];
      for (auto& x : img[j]) x = f.mul(x, lambda[j]);
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      Vec v(b.ambient_rank(), 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(coords1[i][j], img[j][t]));
      if (is_zero(v) || normalize(f, v) != b.point(right[i])) return false;
    }
    images = std::move(img);
    return true;
  };
  while (!try_scalars()) {
    std::size_t pos = 1;
    while (pos < k && ++lambda[pos] == f.q) lambda[pos++] = 1;
    if (pos >= k) break;
  }
  if (!images) throw Error(ErrorCode::kIncompatiblePairing, "pairing does not extend to a linear isomorphism");

  std::size_t r1 = a.ambient_rank();
  std::size_t r2 = b.ambient_rank();
  std::size_t total = r1 + r2 - k;
  auto extend = [&](std::vector<Vec> basis, std::size_t rank) {
    SpanBasis span(f, rank);
    for (const auto& v : basis) span.insert(v);
    for (std::size_t j = 0; j < rank && basis.size() < rank; ++j) {
      Vec u = detail::unit_vector(rank, j);
      if (span.insert(u)) basis.push_back(std::move(u));
    }
    return basis;
  };
  std::vector<Vec> frame1 = extend(basis1, r1);
  std::vector<Vec> frame2 = extend(*images, r2);

  std::vector<Vec> pts;
  std::vector<std::string> labels;
  std::set<std::string> taken;
  Vec c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    solve_in_basis(f, frame1, a.point(i), c);
    Vec v(total, 0);
    std::copy(c.begin(), c.end(), v.begin());
    pts.push_back(normalize(f, v));
    labels.push_back(a.label(i));
    taken.insert(a.label(i));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (n2.contains(i)) continue;
    solve_in_basis(f, frame2, b.point(i), c);
    Vec v(total, 0);
    std::copy(c.begin(), c.begin() + k, v.begin());
    std::copy(c.begin() + k, c.end(), v.begin() + r1);
    pts.push_back(normalize(f, v));
    labels.push_back(detail::unique_label(b.label(i), taken));
    taken.insert(labels.back());
  }
  RepMatroid out(f, total, std::move(pts), std::move(labels));

  ElementSet e1(out.size()), e2(out.size()), glued(out.size());
  for (std::size_t i = 0; i < a.size(); ++i) e1.insert(i);
  for (std::size_t i : left) {
    e2.insert(i);
    glued.insert(i);
  }
  for (std::size_t i = a.size(); i < out.size(); ++i) e2.insert(i);
  ElementSet cl1 = closure(out, e1);
  ElementSet cl2 = closure(out, e2);
  if ((cl1 & cl2) != glued || !proj_equivalent(restriction(out, cl1), a) ||
      !proj_equivalent(restriction(out, cl2), b)) {
    throw Error(ErrorCode::kGutsLeak, "glued matroid does not restrict back to its parts");
  }
  return out;
}

/// The points of the ambient PG(r-1, q) missing from m. Taking the
/// complement twice gives back the point set of m.
inline RepMatroid complement_in_pg(const RepMatroid& m) {
  std::vector<Vec> pts;
  for_each_projective_point(m.ambient_rank(), m.q(), [&](const Vec& v) {
    if (!m.find_point(v)) pts.push_back(v);
  });
  return RepMatroid(m.field(), m.ambient_rank(), std::move(pts));
}

/// M + X: the restriction of the ambient projective geometry to E(M) and X.
inline RepMatroid add_points(const RepMatroid& m, const std::vector<Vec>& extra) {
  std::vector<Vec> pts = m.points();
  std::vector<std::string> labels = m.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  std::set<Vec> added;
  for (const auto& x : extra) {
    if (x.size() != m.ambient_rank()) throw Error(ErrorCode::kDimensionMismatch, "added point has the wrong length");
    Vec p = normalize(m.field(), x);
    if (m.find_point(p) || !added.insert(p).second) {
      throw Error(ErrorCode::kPointCollision, "point " + to_digits(p) + " is already present");
    }
    labels.push_back(detail::unique_label(to_digits(p), taken));
    taken.insert(labels.back());
    pts.push_back(std::move(p));
  }
  return RepMatroid(m.field(), m.ambient_rank(), std::move(pts), std::move(labels));
}

}  // namespace chordalm
