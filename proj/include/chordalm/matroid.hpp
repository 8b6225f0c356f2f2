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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chordalm/element_set.hpp"
#include "chordalm/error.hpp"
#include "chordalm/gfq.hpp"
#include "chordalm/projective.hpp"

namespace chordalm {

/// A simple matroid given by distinct normalized points of PG(r-1, q), where r
/// is the ambient rank. Element i is points()[i] with name labels()[i].
class RepMatroid {
 public:
  RepMatroid() : RepMatroid(gf(2), 0, {}) {}

  RepMatroid(const FieldSpec& field, std::size_t ambient_rank, std::vector<Vec> points,
             std::vector<std::string> labels)
      : field_(&gf(field.q)), rank_(ambient_rank), points_(std::move(points)), labels_(std::move(labels)) {
    if (labels_.size() != points_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "one label per point required");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const Vec& p = points_[i];
      if (p.size() != rank_) {
        throw Error(ErrorCode::kDimensionMismatch, "point " + labels_[i] + " has the wrong length");
      }
      for (Elem x : p) {
        if (x >= field_->q) throw Error(ErrorCode::kInvalidPoint, "point " + labels_[i] + " has a digit outside the field");
      }
      if (is_zero(p)) throw Error(ErrorCode::kInvalidPoint, "point " + labels_[i] + " is zero");
      if (!is_normalized(p)) throw Error(ErrorCode::kInvalidPoint, "point " + labels_[i] + " is not normalized");
      if (!point_index_.emplace(p, i).second) {
        throw Error(ErrorCode::kInvalidPoint, "point " + to_digits(p) + " is repeated");
      }
      if (!label_index_.emplace(labels_[i], i).second) {
        throw Error(ErrorCode::kDuplicateLabel, "label " + labels_[i] + " is repeated");
      }
    }
  }

  /// Points labelled by their digit strings.
  RepMatroid(const FieldSpec& field, std::size_t ambient_rank, std::vector<Vec> points)
      : RepMatroid(field, ambient_rank, points, digit_labels(points)) {}

  static std::vector<std::string> digit_labels(const std::vector<Vec>& points) {
    std::vector<std::string> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(to_digits(p));
    return out;
  }

  const FieldSpec& field() const { return *field_; }
  int q() const { return field_->q; }
  std::size_t ambient_rank() const { return rank_; }
  std::size_t size() const { return points_.size(); }

  const Vec& point(std::size_t i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  ElementSet ground() const { return ElementSet::full(size()); }
  ElementSet empty_set() const { return ElementSet(size()); }

  std::optional<std::size_t> find_label(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view label) const {
    auto i = find_label(label);
    if (!i) throw Error(ErrorCode::kUnknownLabel, "no element labelled " + std::string(label));
    return *i;
  }

  /// Element whose point is the projective point spanned by v, if any.
  std::optional<std::size_t> find_point(std::span<const Elem> v) const {
    if (v.size() != rank_ || is_zero(v)) return std::nullopt;
    auto it = point_index_.find(normalize(*field_, v));
    if (it == point_index_.end()) return std::nullopt;
    return it->second;
  }

  template <typename Labels>
  ElementSet select(const Labels& labels) const {
    ElementSet s(size());
    for (const auto& l : labels) s.insert(index_of(l));
    return s;
  }

  std::vector<std::string> labels_of(const ElementSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  std::vector<Vec> points_of(const ElementSet& s) const {
    std::vector<Vec> out;
    s.for_each([&](std::size_t i) { out.push_back(points_[i]); });
    return out;
  }

 private:
  const FieldSpec* field_;
  std::size_t rank_;
  std::vector<Vec> points_;
  std::vector<std::string> labels_;
  std::map<Vec, std::size_t> point_index_;
  std::unordered_map<std::string, std::size_t> label_index_;
};

namespace detail {

inline void check_universe(const RepMatroid& m, const ElementSet& s) {
  if (s.universe() != m.size()) {
    throw Error(ErrorCode::kUnknownLabel, "element set does not belong to this matroid");
  }
}

inline SpanBasis span_of(const RepMatroid& m, const ElementSet& s) {
  SpanBasis basis(m.field(), m.ambient_rank());
  s.for_each([&](std::size_t i) { basis.insert(m.point(i)); });
  return basis;
}

/// Greedy basis of s in increasing index order.
inline std::vector<std::size_t> greedy_basis(const RepMatroid& m, const ElementSet& s) {
  SpanBasis basis(m.field(), m.ambient_rank());
  std::vector<std::size_t> out;
  s.for_each([&](std::size_t i) {
    if (basis.insert(m.point(i))) out.push_back(i);
  });
  return out;
}

}  // namespace detail

inline std::size_t rank_of(const RepMatroid& m, const ElementSet& s) {
  detail::check_universe(m, s);
  return detail::span_of(m, s).rank();
}

template <typename Labels>
std::size_t rank_of_labels(const RepMatroid& m, const Labels& labels) {
  return rank_of(m, m.select(labels));
}

inline std::size_t matroid_rank(const RepMatroid& m) { return rank_of(m, m.ground()); }

inline bool is_independent(const RepMatroid& m, const ElementSet& s) {
  return rank_of(m, s) == s.size();
}

inline bool is_spanning(const RepMatroid& m, const ElementSet& s) {
  return rank_of(m, s) == matroid_rank(m);
}

inline ElementSet closure(const RepMatroid& m, const ElementSet& s) {
  detail::check_universe(m, s);
  SpanBasis basis = detail::span_of(m, s);
  ElementSet out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (s.contains(i) || basis.contains(m.point(i))) out.insert(i);
  }
  return out;
}

inline bool is_flat(const RepMatroid& m, const ElementSet& s) { return closure(m, s) == s; }

/// All projective points, in or out of the matroid, spanned by s; sorted.
inline std::vector<Vec> pg_closure(const RepMatroid& m, const ElementSet& s) {
  detail::check_universe(m, s);
  const FieldSpec& f = m.field();
  std::vector<std::size_t> basis = detail::greedy_basis(m, s);
  std::set<Vec> out;
  std::size_t k = basis.size();
  std::vector<Elem> coeff(k, 0);
  // Odometer over all coefficient vectors.
  while (true) {
    std::size_t pos = 0;
    while (pos < k && ++coeff[pos] == f.q) coeff[pos++] = 0;
    if (pos == k) break;
    Vec v(m.ambient_rank(), 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (coeff[j] == 0) continue;
      const Vec& b = m.point(basis[j]);
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(coeff[j], b[t]));
    }
    out.insert(normalize(f, v));
  }
  return {out.begin(), out.end()};
}

struct FlatRecord {
  ElementSet elements;
  std::size_t rank = 0;
};

/// Flats of m, optionally only those of one rank, ordered by rank and then by
/// lex order of their member lists. Built upward: the covers of a flat F are
/// the closures of F + e.
inline std::vector<FlatRecord> flats(const RepMatroid& m, std::optional<std::size_t> only_rank = std::nullopt) {
  std::vector<FlatRecord> out;
  std::size_t top = matroid_rank(m);
  if (only_rank && *only_rank > top) return out;
  std::size_t last = only_rank ? *only_rank : top;
  auto by_lex = [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  };
  std::vector<ElementSet> level{closure(m, m.empty_set())};
  for (std::size_t r = 0;; ++r) {
    std::sort(level.begin(), level.end(), by_lex);
    if (!only_rank || *only_rank == r) {
      for (auto& f : level) out.push_back({f, r});
    }
    if (r == last) break;
    std::set<ElementSet> next;
    for (const auto& f : level) {
      SpanBasis base = detail::span_of(m, f);
      ElementSet covered = f;
      for (std::size_t e = 0; e < m.size(); ++e) {
        if (covered.contains(e)) continue;
        SpanBasis b = base;
        b.insert(m.point(e));
        ElementSet cover(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (f.contains(i) || b.contains(m.point(i))) cover.insert(i);
        }
        covered |= cover;
        next.insert(std::move(cover));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return out;
}

inline std::vector<FlatRecord> hyperplanes(const RepMatroid& m) {
  std::size_t r = matroid_rank(m);
  if (r == 0) return {};
  return flats(m, r - 1);
}

inline bool is_circuit(const RepMatroid& m, const ElementSet& s) {
  std::size_t n = s.size();
  if (n == 0 || rank_of(m, s) != n - 1) return false;
  bool minimal = true;
  s.for_each([&](std::size_t x) {
    if (!minimal) return;
    ElementSet t = s;
    t.erase(x);
    if (rank_of(m, t) != n - 1) minimal = false;
  });
  return minimal;
}

/// Circuits of m with at most max_size elements (all circuits by default).
/// A circuit C is found from the independent set C - max(C).
inline std::vector<ElementSet> circuits(const RepMatroid& m, std::optional<std::size_t> max_size = std::nullopt) {
  std::vector<ElementSet> out;
  const FieldSpec& f = m.field();
  std::size_t n = m.size();
  std::size_t cap = max_size.value_or(n + 1);
  std::vector<std::size_t> current;
  std::vector<Vec> current_points;
  auto visit = [&](auto&& self, const SpanBasis& basis, std::size_t start) -> void {
    // Elements after the last chosen one that close a circuit with `current`.
    if (current.size() + 1 <= cap && !current.empty()) {
      for (std::size_t e = current.back() + 1; e < n; ++e) {
        if (!basis.contains(m.point(e))) continue;
        Vec coeffs;
        solve_in_basis(f, current_points, m.point(e), coeffs);
        if (std::all_of(coeffs.begin(), coeffs.end(), [](Elem c) { return c != 0; })) {
          ElementSet c = ElementSet::of(n, current);
          c.insert(e);
          out.push_back(std::move(c));
        }
      }
    }
    if (current.size() + 2 > cap) return;
    for (std::size_t j = start; j < n; ++j) {
      SpanBasis next = basis;
      if (!next.insert(m.point(j))) continue;
      current.push_back(j);
      current_points.push_back(m.point(j));
      self(self, next, j + 1);
      current.pop_back();
      current_points.pop_back();
    }
  };
  visit(visit, SpanBasis(f, m.ambient_rank()), 0);
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  return out;
}

/// Complements of the hyperplanes.
inline std::vector<ElementSet> cocircuits(const RepMatroid& m) {
  if (matroid_rank(m) == 0) throw Error(ErrorCode::kRankZero, "a rank-0 matroid has no cocircuits");
  std::vector<ElementSet> out;
  for (const auto& h : hyperplanes(m)) out.push_back(h.elements.complement());
  return out;
}

/// m|s; the ambient rank is unchanged.
inline RepMatroid restriction(const RepMatroid& m, const ElementSet& s) {
  detail::check_universe(m, s);
  std::vector<Vec> pts;
  std::vector<std::string> labels;
  s.for_each([&](std::size_t i) {
    pts.push_back(m.point(i));
    labels.push_back(m.label(i));
  });
  return RepMatroid(m.field(), m.ambient_rank(), std::move(pts), std::move(labels));
}

inline RepMatroid deletion(const RepMatroid& m, const ElementSet& s) {
  detail::check_universe(m, s);
  return restriction(m, s.complement());
}

/// Rewrites m in coordinates of its own span so that the ambient rank equals
/// r(m). Spanning matroids are returned unchanged.
inline RepMatroid respan(const RepMatroid& m) {
  std::size_t r = matroid_rank(m);
  if (r == m.ambient_rank()) return m;
  RrefResult red = rref(Matrix::from_columns(m.field(), m.ambient_rank(), m.points()));
  std::vector<Vec> pts;
  pts.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    Vec v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = red.reduced(i, j);
    pts.push_back(normalize(m.field(), v));
  }
  return RepMatroid(m.field(), r, std::move(pts), m.labels());
}

/// si(m/I) together with where each element of m went: image[i] is the new
/// index of element i, or empty for elements of cl(I).
struct Contraction {
  RepMatroid matroid;
  std::vector<std::optional<std::size_t>> image;

  std::map<std::string, std::string> label_map(const RepMatroid& original) const {
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i]) out.emplace(original.label(i), matroid.label(*image[i]));
    }
    return out;
  }
};

/// Contracts the independent set I and simplifies. Points are projected along
/// span(I) onto the lex-least coordinate subspace complementary to it; each
/// parallel class keeps the label of its first member.
inline Contraction contract_simplify(const RepMatroid& m, const ElementSet& contracted) {
  detail::check_universe(m, contracted);
  if (!is_independent(m, contracted)) {
    throw Error(ErrorCode::kDependentContractionSet, "contraction set must be independent");
  }
  const FieldSpec& f = m.field();
  std::size_t r = m.ambient_rank();
  std::vector<Vec> basis = m.points_of(contracted);
  std::size_t k = basis.size();
  SpanBasis span(f, r);
  for (const auto& b : basis) span.insert(b);
  for (std::size_t j = 0; j < r && basis.size() < r; ++j) {
    Vec unit(r, 0);
    unit[j] = 1;
    if (span.insert(unit)) basis.push_back(unit);
  }
  SpanBasis kernel(f, r);
  for (std::size_t i = 0; i < k; ++i) kernel.insert(basis[i]);

  std::vector<Vec> pts;
  std::vector<std::string> labels;
  std::map<Vec, std::size_t> seen;
  std::vector<std::optional<std::size_t>> image(m.size());
  Vec coeffs;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (kernel.contains(m.point(i))) continue;
    solve_in_basis(f, basis, m.point(i), coeffs);
    Vec tail = normalize(f, std::span<const Elem>(coeffs).subspan(k));
    auto [it, fresh] = seen.emplace(tail, pts.size());
    if (fresh) {
      pts.push_back(tail);
      labels.push_back(m.label(i));
    }
    image[i] = it->second;
  }
  return {RepMatroid(f, r - k, std::move(pts), std::move(labels)), std::move(image)};
}

/// Invertible map of the ambient space witnessing a projective equivalence.
struct LinMap {
  Matrix matrix;
};

/// A linear map sending the points of a onto the points of b (up to scalars),
/// found by backtracking over images of a greedy basis of a. Non-spanning
/// inputs are respanned first, and the map then acts on respanned coordinates.
inline std::optional<LinMap> proj_equivalent(const RepMatroid& a_in, const RepMatroid& b_in) {
  if (a_in.q() != b_in.q()) throw Error(ErrorCode::kFieldMismatch, "matroids over different fields");
  if (a_in.size() != b_in.size()) return std::nullopt;
  RepMatroid a = respan(a_in);
  RepMatroid b = respan(b_in);
  if (a.ambient_rank() != b.ambient_rank()) return std::nullopt;
  const FieldSpec& f = a.field();
  std::size_t r = a.ambient_rank();
  if (r == 0) return LinMap{Matrix(f, 0, 0)};

  std::vector<std::size_t> basis_idx = detail::greedy_basis(a, a.ground());
  std::vector<Vec> basis = a.points_of(ElementSet::of(a.size(), basis_idx));
  // Coordinates of every point of a in the basis, grouped by the last basis
  // vector they depend on.
  std::vector<std::vector<Vec>> by_level(r);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec c;
    solve_in_basis(f, basis, a.point(i), c);
    std::size_t level = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (c[j] != 0) level = j;
    by_level[level].push_back(std::move(c));
  }

  std::vector<Vec> images(r);
  std::optional<LinMap> found;
  auto consistent = [&](std::size_t level) {
    for (const auto& c : by_level[level]) {
      Vec v(r, 0);
      for (std::size_t j = 0; j <= level; ++j) {
        if (c[j] == 0) continue;
        for (std::size_t t = 0; t < r; ++t) v[t] = f.add(v[t], f.mul(c[j], images[j][t]));
      }
      if (!b.find_point(v)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t level, const SpanBasis& span) -> bool {
    if (level == r) {
      Matrix src = Matrix::from_columns(f, r, basis);
      Matrix dst = Matrix::from_columns(f, r, images);
      found = LinMap{dst * *inverse(src)};
      return true;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (span.contains(b.point(i))) continue;
      SpanBasis next = span;
      next.insert(b.point(i));
      for (Elem s = 1; s < f.q; ++s) {
        if (level == 0 && s != 1) break;
        Vec img = b.point(i);
        for (auto& x : img) x = f.mul(x, s);
        images[level] = std::move(img);
        if (consistent(level) && self(self, level + 1, next)) return true;
      }
    }
    return false;
  };
  search(search, 0, SpanBasis(f, r));
  return found;
}

/// Points of the respanned matroid under the projective map achieving the
/// lexicographically least sorted point list. Equal exactly for projectively
/// equivalent inputs.
inline std::vector<Vec> canonical_form(const RepMatroid& m_in) {
  RepMatroid m = respan(m_in);
  const ProjectiveGroup& group = ProjectiveGroup::get(m.ambient_rank(), m.q());
  const ProjectiveSpace& space = group.space();
  std::size_t n = space.size();
  std::vector<std::size_t> idx;
  for (const auto& p : m.points()) idx.push_back(space.index_of(p));
  ElementSet best;
  bool have = false;
  for (std::size_t g = 0; g < group.order(); ++g) {
    const std::uint8_t* perm = group.perm(g);
    ElementSet img(n);
    for (std::size_t i : idx) img.insert(perm[i]);
    if (!have || lex_less(img, best)) {
      best = std::move(img);
      have = true;
    }
  }
  std::vector<Vec> out;
  if (!have) return out;
  best.for_each([&](std::size_t i) { out.push_back(space.point(i)); });
  return out;
}

}  // namespace chordalm
