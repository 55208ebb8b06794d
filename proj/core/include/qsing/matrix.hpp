#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qsing/cyclotomic.hpp"
#include "qsing/error.hpp"
#include "qsing/integer.hpp"

namespace qsing {

// Dense row-major matrix. Zero-row matrices are allowed; they represent the
// zero subspace when a matrix is used as a list of basis rows.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    for (const auto& r : rows) append_row(std::vector<T>(r));
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    Matrix m(0, rows.empty() ? cols : rows.front().size());
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  static Matrix identity(std::size_t n, const T& one, const T& zero = T()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  const std::vector<T>& data() const noexcept { return data_; }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_)
      throw ShapeError("row of length " + std::to_string(r.size()) + " in a matrix with " +
                       std::to_string(cols_) + " columns");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("cannot multiply " + a.shape() + " by " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        // Start from the first nonzero term so single-term entries keep any
        // cached structure of the product.
        bool started = false;
        T acc{};
        for (std::size_t k = 0; k < a.cols_; ++k) {
          if (is_zero_value(a(i, k)) || is_zero_value(b(k, j))) continue;
          if (started) {
            acc += a(i, k) * b(k, j);
          } else {
            acc = a(i, k) * b(k, j);
            started = true;
          }
        }
        if (!started && a.cols_ > 0) acc = a(i, 0) * b(0, j);
        c(i, j) = std::move(acc);
      }
    }
    return c;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw ShapeError("vector length does not match matrix " + shape());
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (cols_ == 0) continue;
      T acc = (*this)(i, 0) * v[0];
      for (std::size_t k = 1; k < cols_; ++k) acc += (*this)(i, k) * v[k];
      out[i] = std::move(acc);
    }
    return out;
  }

  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (T& x : m.data_) x = x * s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  // Shape first, then entries in row-major order.
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (auto c = a.data_[k] <=> b.data_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = rows_ * 131 + cols_;
    for (const T& x : data_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static bool is_zero_value(const T& x) { return x.is_zero(); }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError("shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using FieldMatrix = Matrix<Cyclotomic>;

IntMatrix int_identity(std::size_t n);
FieldMatrix field_identity(std::size_t n, int conductor = 1);
FieldMatrix to_field(const IntMatrix& m, int conductor = 1);

// Least common multiple of the entry conductors.
int common_conductor(const FieldMatrix& m);
FieldMatrix promote(const FieldMatrix& m, int conductor);
// Promotes every entry to common_conductor(m).
FieldMatrix unify_conductor(const FieldMatrix& m);

Cyclotomic trace(const FieldMatrix& m);
bool is_diagonal(const FieldMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const FieldMatrix& m);

}  // namespace qsing

template <class T>
struct std::hash<qsing::Matrix<T>> {
  std::size_t operator()(const qsing::Matrix<T>& m) const noexcept { return m.hash(); }
};
