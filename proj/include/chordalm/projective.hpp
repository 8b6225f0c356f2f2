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
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "chordalm/error.hpp"
#include "chordalm/gfq.hpp"

namespace chordalm {

/// Number of points of PG(rank-1, q).
inline std::size_t pg_point_count(std::size_t rank, int q) {
  std::size_t total = 0;
  std::size_t power = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    total += power;
    power *= static_cast<std::size_t>(q);
  }
  return total;
}

/// Calls fn(v) for every normalized nonzero vector of GF(q)^rank, in
/// lexicographic order of digit strings.
template <typename Fn>
void for_each_projective_point(std::size_t rank, int q, Fn&& fn) {
  if (rank == 0) return;
  Vec v(rank, 0);
  // Leading 1 at position lead, arbitrary digits after it.
  for (std::size_t lead = rank; lead-- > 0;) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      fn(static_cast<const Vec&>(v));
      std::size_t pos = rank;
      while (pos-- > lead + 1) {
        if (++v[pos] < q) break;
        v[pos] = 0;
      }
      if (pos == lead) break;
    }
  }
}

/// The points of PG(rank-1, q) indexed in lexicographic digit order.
class ProjectiveSpace {
 public:
  ProjectiveSpace(const FieldSpec& f, std::size_t rank)
      : field_(&f), rank_(rank) {
    std::size_t codes = 1;
    for (std::size_t i = 0; i < rank; ++i) codes *= static_cast<std::size_t>(f.q);
    code_to_index_.assign(codes, kNone);
    for_each_projective_point(rank, f.q, [&](const Vec& v) {
      code_to_index_[vector_code(v, f.q)] = static_cast<std::uint32_t>(points_.size());
      points_.push_back(v);
    });
  }

  const FieldSpec& field() const { return *field_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return points_.size(); }
  const Vec& point(std::size_t i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }

  /// Index of the projective point spanned by a nonzero vector.
  std::size_t index_of(std::span<const Elem> v) const {
    Vec n = normalize(*field_, v);
    return code_to_index_[vector_code(n, field_->q)];
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};
  const FieldSpec* field_;
  std::size_t rank_;
  std::vector<Vec> points_;
  std::vector<std::uint32_t> code_to_index_;
};

/// |PGL(rank, q)| = |GL(rank, q)| / (q - 1).
inline std::uint64_t pgl_order(std::size_t rank, int q) {
  std::uint64_t qr = 1;
  for (std::size_t i = 0; i < rank; ++i) qr *= static_cast<std::uint64_t>(q);
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    order *= qr - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  return rank == 0 ? 1 : order / static_cast<std::uint64_t>(q - 1);
}

/// PGL(rank, q) acting on the point indices of a ProjectiveSpace, stored as
/// one permutation per group element. Built once per (rank, q) and shared.
class ProjectiveGroup {
 public:
  static constexpr std::uint64_t kMaxOrder = 1'000'000;

  static bool feasible(std::size_t rank, int q) {
    return pgl_order(rank, q) <= kMaxOrder && pg_point_count(rank, q) <= 255;
  }

  static const ProjectiveGroup& get(std::size_t rank, int q) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, int>, std::unique_ptr<ProjectiveGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{rank, q}];
    if (!slot) slot.reset(new ProjectiveGroup(rank, q));
    return *slot;
  }

  const ProjectiveSpace& space() const { return space_; }
  std::size_t order() const { return perms_.size() / std::max<std::size_t>(space_.size(), 1); }
  std::size_t degree() const { return space_.size(); }

  /// Image of point i under group element g.
  std::uint8_t image(std::size_t g, std::size_t i) const { return perms_[g * space_.size() + i]; }
  const std::uint8_t* perm(std::size_t g) const { return perms_.data() + g * space_.size(); }

 private:
  ProjectiveGroup(std::size_t rank, int q) : space_(gf(q), rank) {
    if (!feasible(rank, q)) {
      throw Error(ErrorCode::kInfeasibleUniverse,
                  "PGL(" + std::to_string(rank) + "," + std::to_string(q) +
                      ") is too large to enumerate");
    }
    const FieldSpec& f = gf(q);
    std::size_t n = space_.size();
    if (rank == 0) return;
    // Columns: first one normalized (one representative per scalar class),
    // the rest any nonzero vector outside the span of the earlier ones.
    std::vector<Vec> nonzero;
    {
      std::size_t codes = 1;
      for (std::size_t i = 0; i < rank; ++i) codes *= static_cast<std::size_t>(q);
      for (std::size_t c = 1; c < codes; ++c) {
        Vec v(rank);
        std::size_t x = c;
        for (std::size_t i = rank; i-- > 0; x /= static_cast<std::size_t>(q)) v[i] = static_cast<Elem>(x % q);
        nonzero.push_back(std::move(v));
      }
    }
    std::vector<Vec> columns(rank);
    std::vector<std::uint8_t> perm(n);
    auto emit = [&] {
      Matrix a = Matrix::from_columns(f, rank, columns);
      for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(space_.index_of(a.apply(space_.point(i))));
      perms_.insert(perms_.end(), perm.begin(), perm.end());
    };
    auto extend = [&](auto&& self, std::size_t col, const SpanBasis& basis) -> void {
      if (col == rank) {
        emit();
        return;
      }
      for (const auto& v : nonzero) {
        if (col == 0 && !is_normalized(v)) continue;
        SpanBasis next = basis;
        if (!next.insert(v)) continue;
        columns[col] = v;
        self(self, col + 1, next);
      }
    };
    extend(extend, 0, SpanBasis(f, rank));
  }

  ProjectiveSpace space_;
  std::vector<std::uint8_t> perms_;
};

}  // namespace chordalm
