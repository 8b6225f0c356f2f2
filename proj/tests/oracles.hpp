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

// Brute-force reference implementations. Nothing here calls the library's
// linear algebra; results are computed by enumerating field elements, linear
// combinations and matrices directly.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chordalm/element_set.hpp"
#include "chordalm/matroid.hpp"

namespace oracle {

using Vec = std::vector<std::uint8_t>;

struct Field {
  int q, p, k;
  std::vector<int> modulus;  // monic, low degree first, length k+1

  explicit Field(int q_) : q(q_) {
    for (int cand = 2; cand <= q; ++cand) {
      int x = q, e = 0;
      while (x % cand == 0) x /= cand, ++e;
      if (x == 1) {
        p = cand;
        k = e;
        break;
      }
    }
    if (q == 4) modulus = {1, 1, 1};
    else if (q == 8) modulus = {1, 1, 0, 1};
    else if (q == 9) modulus = {1, 0, 1};
    else modulus = {0, 1};
  }

  std::vector<int> coeffs(int a) const {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, a /= p) c[static_cast<std::size_t>(i)] = a % p;
    return c;
  }
  int code(const std::vector<int>& c) const {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p + c[static_cast<std::size_t>(i)];
    return a;
  }
  int add(int a, int b) const {
    auto x = coeffs(a), y = coeffs(b);
    for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] = (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p;
    return code(x);
  }
  int mul(int a, int b) const {
    auto x = coeffs(a), y = coeffs(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    for (int d = 2 * k - 1; d >= k; --d) {
      int c = prod[static_cast<std::size_t>(d)] % p;
      prod[static_cast<std::size_t>(d)] = 0;
      for (int i = 0; i < k; ++i) {
        prod[static_cast<std::size_t>(d - k + i)] += (p - c) * modulus[static_cast<std::size_t>(i)];
      }
    }
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)] % p;
    return code(out);
  }
};

inline std::vector<Vec> all_vectors(std::size_t r, int q) {
  std::vector<Vec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::size_t>(q);
  for (std::size_t c = 0; c < total; ++c) {
    Vec v(r);
    std::size_t x = c;
    for (std::size_t i = r; i-- > 0; x /= static_cast<std::size_t>(q)) v[i] = static_cast<std::uint8_t>(x % static_cast<std::size_t>(q));
    out.push_back(v);
  }
  return out;
}

/// Every linear combination of the given vectors.
inline std::set<Vec> span(const Field& f, std::size_t r, const std::vector<Vec>& vs) {
  std::set<Vec> out{Vec(r, 0)};
  for (const auto& v : vs) {
    std::set<Vec> next;
    for (const auto& u : out) {
      for (int c = 0; c < f.q; ++c) {
        Vec w = u;
        for (std::size_t i = 0; i < r; ++i) w[i] = static_cast<std::uint8_t>(f.add(w[i], f.mul(c, v[i])));
        next.insert(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::size_t rank(const Field& f, std::size_t r, const std::vector<Vec>& vs) {
  std::size_t size = span(f, r, vs).size(), d = 0;
  while (size > 1) size /= static_cast<std::size_t>(f.q), ++d;
  return d;
}

inline Vec normalize(const Field& f, Vec v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  int c = 1;
  while (f.mul(c, v[lead]) != 1) ++c;
  for (auto& x : v) x = static_cast<std::uint8_t>(f.mul(c, x));
  return v;
}

/// Normalized nonzero vectors in lexicographic order.
inline std::vector<Vec> pg_points(const Field& f, std::size_t r) {
  std::set<Vec> pts;
  for (const auto& v : all_vectors(r, f.q)) {
    bool zero = true;
    for (auto x : v) zero = zero && x == 0;
    if (!zero) pts.insert(normalize(f, v));
  }
  return {pts.begin(), pts.end()};
}

inline std::vector<Vec> points_of(const chordalm::RepMatroid& m, const chordalm::ElementSet& s) {
  std::vector<Vec> out;
  for (auto i : s.members()) out.push_back(m.point(i));
  return out;
}

inline std::size_t rank_of(const chordalm::RepMatroid& m, const chordalm::ElementSet& s) {
  return rank(Field(m.q()), m.ambient_rank(), points_of(m, s));
}

inline chordalm::ElementSet closure(const chordalm::RepMatroid& m, const chordalm::ElementSet& s) {
  Field f(m.q());
  auto sp = span(f, m.ambient_rank(), points_of(m, s));
  chordalm::ElementSet out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (sp.count(m.point(i))) out.insert(i);
  return out;
}

/// Distinct closures of all subsets, keyed by rank.
inline std::map<std::size_t, std::set<std::vector<std::size_t>>> flats(const chordalm::RepMatroid& m) {
  std::map<std::size_t, std::set<std::vector<std::size_t>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    chordalm::ElementSet s(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (mask >> i & 1) s.insert(i);
    auto c = oracle::closure(m, s);
    out[oracle::rank_of(m, c)].insert(c.members());
  }
  return out;
}

/// Minimal dependent subsets, by subset enumeration.
inline std::set<std::vector<std::size_t>> circuits(const chordalm::RepMatroid& m) {
  std::set<std::vector<std::size_t>> out;
  std::vector<bool> dependent(std::size_t{1} << m.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    chordalm::ElementSet s(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (mask >> i & 1) s.insert(i);
    dependent[mask] = oracle::rank_of(m, s) < s.size();
    if (!dependent[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < m.size() && minimal; ++i)
      if ((mask >> i & 1) && dependent[mask & ~(std::uint64_t{1} << i)]) minimal = false;
    if (minimal) out.insert(s.members());
  }
  return out;
}

/// Invertible r x r matrices, as column lists.
inline void for_each_gl(const Field& f, std::size_t r, const std::function<void(const std::vector<Vec>&)>& fn) {
  auto vecs = all_vectors(r, f.q);
  std::vector<Vec> cols(r);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == r) {
      fn(cols);
      return;
    }
    for (const auto& v : vecs) {
      cols[j] = v;
      std::vector<Vec> prefix(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(j + 1));
      if (rank(f, r, prefix) == j + 1) rec(j + 1);
    }
  };
  rec(0);
}

inline Vec apply(const Field& f, const std::vector<Vec>& cols, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>(f.add(out[i], f.mul(cols[j][i], v[j])));
  return out;
}

/// Orbits of PGL(r, q) on all subsets of PG(r-1, q), by Burnside's lemma over
/// GL(r, q) (scalars act trivially, so the average is unchanged).
inline std::uint64_t burnside_subset_orbits(int q, std::size_t r) {
  Field f(q);
  auto pts = pg_points(f, r);
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;
  long double sum = 0;
  std::uint64_t order = 0;
  for_each_gl(f, r, [&](const std::vector<Vec>& g) {
    ++order;
    std::vector<std::size_t> perm(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) perm[i] = index[normalize(f, apply(f, g, pts[i]))];
    std::vector<bool> seen(pts.size());
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    sum += static_cast<long double>(std::uint64_t{1} << cycles);
  });
  return static_cast<std::uint64_t>(sum / static_cast<long double>(order) + 0.5L);
}

/// True if some invertible map sends the point set of a onto that of b.
inline bool projectively_equivalent(const chordalm::RepMatroid& a, const chordalm::RepMatroid& b) {
  if (a.q() != b.q() || a.ambient_rank() != b.ambient_rank() || a.size() != b.size()) return false;
  Field f(a.q());
  std::set<Vec> target(b.points().begin(), b.points().end());
  bool found = false;
  for_each_gl(f, a.ambient_rank(), [&](const std::vector<Vec>& g) {
    if (found) return;
    for (const auto& p : a.points())
      if (!target.count(normalize(f, apply(f, g, p)))) return;
    found = true;
  });
  return found;
}

}  // namespace oracle
