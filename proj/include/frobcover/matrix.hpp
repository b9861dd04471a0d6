#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobcover {

template <class T>
concept CommutativeRing = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

/// Dense row-major matrix over a commutative ring without a global zero;
/// entries carry their own context (modulus, curve).
template <CommutativeRing T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    std::vector<T> e(n * n, zero);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = one;
    return Matrix(n, n, std::move(e));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }
  T& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
  const std::vector<T>& entries() const noexcept { return a_; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not compose");
    std::vector<T> out;
    out.reserve(rows_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < o.cols_; ++j) {
        T acc = (*this)(i, 0) * o(0, j);
        for (std::size_t k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
        out.push_back(std::move(acc));
      }
    }
    return Matrix(rows_, o.cols_, std::move(out));
  }

  Matrix operator+(const Matrix& o) const { return zip(o, [](const T& x, const T& y) { return x + y; }); }
  Matrix operator-(const Matrix& o) const { return zip(o, [](const T& x, const T& y) { return x - y; }); }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(a_.front()))>;
    std::vector<U> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  Matrix scaled(const T& s) const {
    return map([&](const T& x) { return s * x; });
  }

  Matrix transposed() const {
    std::vector<T> out;
    out.reserve(a_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    }
    return Matrix(cols_, rows_, std::move(out));
  }

  /// Delete row r and column c.
  Matrix minor_matrix(std::size_t r, std::size_t c) const {
    std::vector<T> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != c) out.push_back((*this)(i, j));
      }
    }
    return Matrix(rows_ - 1, cols_ - 1, std::move(out));
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!(a_[i] == o.a_[i])) return false;
    }
    return true;
  }

 private:
  template <class F>
  Matrix zip(const Matrix& o, F f) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
    std::vector<T> out;
    out.reserve(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) out.push_back(f(a_[i], o.a_[i]));
    return Matrix(rows_, cols_, std::move(out));
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> a_;
};

/// Laplace expansion along the first row.
template <CommutativeRing T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("determinant needs a square matrix");
  if (m.rows() == 1) return m(0, 0);
  if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc = m(0, 0) * determinant(m.minor_matrix(0, 0));
  for (std::size_t j = 1; j < m.cols(); ++j) {
    T term = m(0, j) * determinant(m.minor_matrix(0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Classical adjoint: adj(M)_{ij} = (-1)^{i+j} det(M with row j, column i removed).
template <CommutativeRing T>
Matrix<T> adjugate(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols() || n < 2) throw std::invalid_argument("adjugate needs a square matrix of size >= 2");
  std::vector<T> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T c = determinant(m.minor_matrix(j, i));
      out.push_back((i + j) % 2 == 0 ? c : -c);
    }
  }
  return Matrix<T>(n, n, std::move(out));
}

/// adj(M) / det(M). Requires T::inverse(), which throws for non-units.
template <CommutativeRing T>
  requires requires(const T& a) {
    { a.inverse() } -> std::convertible_to<T>;
  }
Matrix<T> inverse(const Matrix<T>& m) {
  const T inv_det = determinant(m).inverse();
  return adjugate(m).scaled(inv_det);
}

/// Entrywise p-th power, for entry types providing p_power().
template <CommutativeRing T>
Matrix<T> frobenius_twist(const Matrix<T>& m) {
  return m.map([](const T& x) { return x.p_power(); });
}

}  // namespace frobcover
