// Copyright 2026 The cospec Authors
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

// Dense row-major matrices with exact entries, plus the block and tensor
// operations used by the unfolding constructions.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cospec/error.hpp"

namespace cospec {

template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw PreconditionError("Matrix: entry count does not match shape");
    }
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw PreconditionError("Matrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, T{1}); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }
  std::span<const T> entries() const noexcept { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_binary() const {
    for (const T& v : data_)
      if (v != T{0} && v != T{1}) return false;
    return true;
  }

  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
      if ((*this)(i, i) != T{0}) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (v != T{0}) return false;
    return true;
  }

  std::vector<T> row_sums() const {
    std::vector<T> s(rows_, T{0});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
    return s;
  }

  std::vector<T> col_sums() const {
    std::vector<T> s(cols_, T{0});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
    return s;
  }

  T trace() const {
    T t{0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Copy of the sub-block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("Matrix::block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
      throw PreconditionError("Matrix::set_block out of range");
    }
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("Matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{0}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("Matrix sum: shapes differ");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("Matrix difference: shapes differ");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RealMatrix = Matrix<double>;

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const T s = a(i1, j1);
      if (s == T{0}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          k(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
    }
  return k;
}

template <typename T>
Matrix<T> block_diag(std::span<const Matrix<T>> parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) r += p.rows(), c += p.cols();
  Matrix<T> out(r, c);
  r = c = 0;
  for (const auto& p : parts) {
    out.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return out;
}

template <typename T>
Matrix<T> block_diag(std::initializer_list<Matrix<T>> parts) {
  return block_diag(std::span<const Matrix<T>>(parts.begin(), parts.size()));
}

/// [[0, v], [w, 0]] with zero fill sized from v and w.
template <typename T>
Matrix<T> block_antidiag(const Matrix<T>& v, const Matrix<T>& w) {
  Matrix<T> out(v.rows() + w.rows(), w.cols() + v.cols());
  out.set_block(0, w.cols(), v);
  out.set_block(v.rows(), 0, w);
  return out;
}

/// Transposes every block_size x block_size block in place.
template <typename T>
Matrix<T> partial_transpose(const Matrix<T>& m, std::size_t block_size) {
  if (!m.square()) throw PreconditionError("partial_transpose: matrix is not square");
  if (block_size == 0 || m.rows() % block_size != 0) {
    throw PreconditionError("partial_transpose: block size does not divide the dimension");
  }
  Matrix<T> out(m.rows(), m.cols());
  const std::size_t nb = m.rows() / block_size;
  for (std::size_t bi = 0; bi < nb; ++bi)
    for (std::size_t bj = 0; bj < nb; ++bj)
      for (std::size_t i = 0; i < block_size; ++i)
        for (std::size_t j = 0; j < block_size; ++j)
          out(bi * block_size + i, bj * block_size + j) = m(bi * block_size + j, bj * block_size + i);
  return out;
}

/// N x N grid of blocks whose row heights and column widths line up.
template <std::size_t N, typename T = std::int64_t>
class BlockMatrix {
 public:
  using Grid = std::array<std::array<Matrix<T>, N>, N>;

  BlockMatrix() = default;
  explicit BlockMatrix(Grid blocks) : blocks_(std::move(blocks)) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        if (blocks_[i][j].rows() != blocks_[i][0].rows() || blocks_[i][j].cols() != blocks_[0][j].cols()) {
          throw PreconditionError("BlockMatrix: inconsistent block dimensions in grid");
        }
      }
  }

  /// Cuts a flat matrix along the given row heights and column widths.
  static BlockMatrix split(const Matrix<T>& flat, const std::array<std::size_t, N>& row_sizes,
                           const std::array<std::size_t, N>& col_sizes) {
    const auto rsum = std::accumulate(row_sizes.begin(), row_sizes.end(), std::size_t{0});
    const auto csum = std::accumulate(col_sizes.begin(), col_sizes.end(), std::size_t{0});
    if (rsum != flat.rows() || csum != flat.cols()) throw PreconditionError("BlockMatrix::split: sizes do not cover matrix");
    Grid g;
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < N; ++i) {
      std::size_t c0 = 0;
      for (std::size_t j = 0; j < N; ++j) {
        g[i][j] = flat.block(r0, c0, row_sizes[i], col_sizes[j]);
        c0 += col_sizes[j];
      }
      r0 += row_sizes[i];
    }
    return BlockMatrix(std::move(g));
  }

  const Matrix<T>& operator()(std::size_t i, std::size_t j) const { return blocks_[i][j]; }

  std::array<std::size_t, N> row_sizes() const {
    std::array<std::size_t, N> s{};
    for (std::size_t i = 0; i < N; ++i) s[i] = blocks_[i][0].rows();
    return s;
  }
  std::array<std::size_t, N> col_sizes() const {
    std::array<std::size_t, N> s{};
    for (std::size_t j = 0; j < N; ++j) s[j] = blocks_[0][j].cols();
    return s;
  }

  Matrix<T> flatten() const {
    const auto rs = row_sizes();
    const auto cs = col_sizes();
    Matrix<T> out(std::accumulate(rs.begin(), rs.end(), std::size_t{0}),
                  std::accumulate(cs.begin(), cs.end(), std::size_t{0}));
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < N; ++i) {
      std::size_t c0 = 0;
      for (std::size_t j = 0; j < N; ++j) {
        out.set_block(r0, c0, blocks_[i][j]);
        c0 += cs[j];
      }
      r0 += rs[i];
    }
    return out;
  }

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  Grid blocks_;
};

using Block2 = BlockMatrix<2>;
using Block3 = BlockMatrix<3>;

/// A flat matrix together with the block sizes of its canonical partition.
template <typename T = std::int64_t>
struct PartitionedMatrix {
  Matrix<T> matrix;
  std::vector<std::size_t> row_blocks;
  std::vector<std::size_t> col_blocks;
};

/// Partitioned tensor product: blockwise Kronecker product of two N x N grids.
template <std::size_t N, typename T>
PartitionedMatrix<T> partitioned_tensor(const BlockMatrix<N, T>& l, const BlockMatrix<N, T>& h) {
  typename BlockMatrix<N, T>::Grid g;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) g[i][j] = kron(l(i, j), h(i, j));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (g[i][j].rows() != g[i][0].rows() || g[i][j].cols() != g[0][j].cols()) {
        throw PreconditionError("partitioned tensor product: tensored blocks do not line up");
      }
  BlockMatrix<N, T> product(std::move(g));
  const auto rs = product.row_sizes();
  const auto cs = product.col_sizes();
  return {product.flatten(), {rs.begin(), rs.end()}, {cs.begin(), cs.end()}};
}

inline PartitionedMatrix<> ptp2(const Block2& m, const Block2& h) { return partitioned_tensor(m, h); }
inline PartitionedMatrix<> ptp3(const Block3& l, const Block3& a) { return partitioned_tensor(l, a); }

}  // namespace cospec
