#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilgeo/poly.hpp"
#include "nilgeo/rational.hpp"

namespace nilgeo {

/// Dense row-major matrix over an exact commutative ring R. Instantiated
/// with Rational for numeric work and Poly for symbolic work; R must
/// support construction from long, +, -, *, and ==.
template <typename R>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a.at(i, k);
        if (aik == R(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  Matrix operator*(const R& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
  }

  std::vector<R> operator*(const std::vector<R>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<R> r(rows_, R(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  R trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    R t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == R(0))) return false;
    return true;
  }
  bool is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (!(at(i, j) == -at(j, i))) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }
  bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

  /// True when the matrix is s times the identity; sets s when so.
  bool is_scalar(R& s) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    s = at(0, 0);
    return *this == identity(rows_) * s;
  }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out << "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out << ", ";
        out << entry_string(at(i, j));
      }
      out << "]";
      if (i + 1 < rows_) out << "\n";
    }
    return out.str();
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }
  static std::string entry_string(const Rational& x) { return nilgeo::to_string(x); }
  static std::string entry_string(const Poly& x) { return x.to_string(); }

  std::size_t rows_, cols_;
  std::vector<R> data_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<Poly>;

template <typename R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b - b * a;
}

template <typename R>
Matrix<R> anticommutator(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b + b * a;
}

/// Lifts a rational matrix into a polynomial matrix with nvars variables.
inline PMatrix to_poly_matrix(const QMatrix& m, std::size_t nvars) {
  PMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = Poly::constant(nvars, m.at(i, j));
  return r;
}

template <typename R>
R dot(const std::vector<R>& a, const std::vector<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot shape mismatch");
  R s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <typename R>
std::vector<R> vec_add(const std::vector<R>& a, const std::vector<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
  std::vector<R> r(a.size(), R(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename R>
std::vector<R> vec_sub(const std::vector<R>& a, const std::vector<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
  std::vector<R> r(a.size(), R(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename R>
std::vector<R> vec_scale(const R& s, const std::vector<R>& a) {
  std::vector<R> r(a.size(), R(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

template <typename R>
bool vec_is_zero(const std::vector<R>& a) {
  for (const auto& x : a)
    if (!(x == R(0))) return false;
  return true;
}

}  // namespace nilgeo
