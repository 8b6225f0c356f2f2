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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chordalm/error.hpp"

namespace chordalm {

using Elem = std::uint8_t;

/// Arithmetic tables for GF(q), q in {2, 3, 4, 5, 7, 8, 9}.
///
/// An element of GF(p^k) is the polynomial a_0 + a_1 x + ... + a_{k-1} x^{k-1}
/// reduced modulo a fixed irreducible polynomial, and its code is
/// a_0 + a_1 p + ... + a_{k-1} p^{k-1}. The moduli are
///   GF(4): x^2 + x + 1,  GF(8): x^3 + x + 1,  GF(9): x^2 + 1,
/// so in GF(4) the codes 0, 1, 2, 3 denote 0, 1, w, w + 1.
struct FieldSpec {
  static constexpr int kMaxOrder = 9;
  using Table = std::array<std::array<Elem, kMaxOrder>, kMaxOrder>;

  int q = 0;
  int p = 0;
  int k = 0;
  Table add_table{};
  Table mul_table{};
  std::array<Elem, kMaxOrder> neg_table{};
  std::array<Elem, kMaxOrder> inv_table{};  // inv_table[0] is unused

  Elem add(Elem a, Elem b) const { return add_table[a][b]; }
  Elem mul(Elem a, Elem b) const { return mul_table[a][b]; }
  Elem neg(Elem a) const { return neg_table[a]; }
  Elem sub(Elem a, Elem b) const { return add_table[a][neg_table[b]]; }
  Elem inv(Elem a) const { return inv_table[a]; }
  Elem div(Elem a, Elem b) const { return mul_table[a][inv_table[b]]; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.q == b.q; }
};

inline bool is_supported_order(int q) {
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
}

inline FieldSpec make_field(int q) {
  if (!is_supported_order(q)) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "field order " + std::to_string(q) +
                    " is not a prime power in 2..9");
  }
  FieldSpec f;
  f.q = q;
  switch (q) {
    case 4: f.p = 2; f.k = 2; break;
    case 8: f.p = 2; f.k = 3; break;
    case 9: f.p = 3; f.k = 2; break;
    default: f.p = q; f.k = 1; break;
  }
  // Low-to-high coefficients of the monic modulus, leading 1 omitted.
  std::vector<int> modulus;
  if (q == 4) modulus = {1, 1};
  if (q == 8) modulus = {1, 1, 0};
  if (q == 9) modulus = {1, 0};

  auto to_poly = [&](int code) {
    std::vector<int> c(f.k);
    for (int i = 0; i < f.k; ++i, code /= f.p) c[i] = code % f.p;
    return c;
  };
  auto to_code = [&](const std::vector<int>& c) {
    int code = 0;
    for (int i = f.k; i-- > 0;) code = code * f.p + c[i];
    return code;
  };

  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      auto pa = to_poly(a);
      auto pb = to_poly(b);
      std::vector<int> sum(f.k);
      for (int i = 0; i < f.k; ++i) sum[i] = (pa[i] + pb[i]) % f.p;
      f.add_table[a][b] = static_cast<Elem>(to_code(sum));

      std::vector<int> prod(2 * f.k, 0);
      for (int i = 0; i < f.k; ++i)
        for (int j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % f.p;
      // x^k = -(modulus) reduces every degree >= k.
      for (int d = 2 * f.k - 1; d >= f.k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < f.k; ++i) {
          prod[d - f.k + i] = ((prod[d - f.k + i] - c * modulus[i]) % f.p + f.p) % f.p;
        }
      }
      prod.resize(f.k);
      f.mul_table[a][b] = static_cast<Elem>(to_code(prod));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add_table[a][b] == 0) f.neg_table[a] = static_cast<Elem>(b);
      if (a != 0 && f.mul_table[a][b] == 1) f.inv_table[a] = static_cast<Elem>(b);
    }
  }
  return f;
}

/// Shared immutable instance for a supported order.
inline const FieldSpec& gf(int q) {
  static const std::array<FieldSpec, 10> fields = [] {
    std::array<FieldSpec, 10> out{};
    for (int order = 2; order <= 9; ++order) {
      if (is_supported_order(order)) out[order] = make_field(order);
    }
    return out;
  }();
  if (!is_supported_order(q)) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "field order " + std::to_string(q) + " is not supported");
  }
  return fields[q];
}

using Vec = std::vector<Elem>;

inline bool is_zero(std::span<const Elem> v) {
  for (Elem x : v)
    if (x != 0) return false;
  return true;
}

/// Scalar multiple of v whose first nonzero coordinate is 1.
inline Vec normalize(const FieldSpec& f, std::span<const Elem> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) throw Error(ErrorCode::kZeroVector, "cannot normalize the zero vector");
  Elem s = f.inv(v[lead]);
  Vec out(v.begin(), v.end());
  for (auto& x : out) x = f.mul(x, s);
  return out;
}

inline bool is_normalized(std::span<const Elem> v) {
  for (Elem x : v) {
    if (x == 0) continue;
    return x == 1;
  }
  return false;
}

/// Digits most significant coordinate first, one character per coordinate.
inline std::string to_digits(std::span<const Elem> v) {
  std::string s;
  s.reserve(v.size());
  for (Elem x : v) s.push_back(static_cast<char>('0' + x));
  return s;
}

/// Integer code of a vector read as a base-q numeral, first coordinate most
/// significant. Orders vectors the same way as their digit strings.
inline std::size_t vector_code(std::span<const Elem> v, int q) {
  std::size_t c = 0;
  for (Elem x : v) c = c * static_cast<std::size_t>(q) + x;
  return c;
}

/// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(const FieldSpec& f, std::size_t rows,
                             std::span<const Vec> columns) {
    Matrix m(f, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) {
        throw Error(ErrorCode::kDimensionMismatch, "column length differs from row count");
      }
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  const FieldSpec& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "vector length differs from column count");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      Elem acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc = field_->add(acc, field_->mul((*this)(i, j), v[j]));
      out[i] = acc;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
    const FieldSpec& f = *a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Elem x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const FieldSpec* field_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  Matrix reduced;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
  const FieldSpec& f = m.field();
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    Elem s = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Elem c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline std::optional<Matrix> inverse(const Matrix& m) {
  const FieldSpec& f = m.field();
  std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "inverse of a non-square matrix");
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

/// Incrementally maintained echelon basis of a subspace of GF(q)^dim.
class SpanBasis {
 public:
  SpanBasis(const FieldSpec& f, std::size_t dim) : field_(&f), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Residual of v after elimination against the basis.
  Vec reduce(std::span<const Elem> v) const {
    if (v.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "vector length differs from ambient rank");
    const FieldSpec& f = *field_;
    Vec r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Elem c = r[pivots_[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) r[j] = f.sub(r[j], f.mul(c, rows_[k][j]));
    }
    return r;
  }

  bool contains(std::span<const Elem> v) const { return is_zero(reduce(v)); }

  /// Adds v; returns false (and leaves the basis unchanged) if v is in the span.
  bool insert(std::span<const Elem> v) {
    Vec r = reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && r[lead] == 0) ++lead;
    if (lead == dim_) return false;
    const FieldSpec& f = *field_;
    Elem s = f.inv(r[lead]);
    for (auto& x : r) x = f.mul(x, s);
    // Keep rows fully reduced so reduce() is order independent.
    for (auto& row : rows_) {
      Elem c = row[lead];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) row[j] = f.sub(row[j], f.mul(c, r[j]));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(lead);
    return true;
  }

 private:
  const FieldSpec* field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// True iff v is a linear combination of the vectors in s.
inline bool in_span(const FieldSpec& f, std::span<const Elem> v, std::span<const Vec> s) {
  SpanBasis basis(f, v.size());
  for (const auto& u : s) {
    if (u.size() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "vectors of different lengths");
    basis.insert(u);
  }
  return basis.contains(v);
}

/// Coefficients c with sum c_i * basis_i = v, or false if v is outside the
/// span. The basis vectors must be independent.
inline bool solve_in_basis(const FieldSpec& f, std::span<const Vec> basis,
                           std::span<const Elem> v, Vec& coeffs) {
  std::size_t dim = v.size();
  std::size_t k = basis.size();
  Matrix aug(f, dim, k + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < dim; ++i) aug(i, j) = basis[j][i];
  for (std::size_t i = 0; i < dim; ++i) aug(i, k) = v[i];
  RrefResult r = rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == k) return false;
  coeffs.assign(k, 0);
  for (std::size_t row = 0; row < r.pivot_cols.size(); ++row) coeffs[r.pivot_cols[row]] = r.reduced(row, k);
  return true;
}

}  // namespace chordalm
