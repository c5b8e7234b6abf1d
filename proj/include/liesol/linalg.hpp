#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "liesol/quadratic.hpp"
#include "liesol/rational.hpp"

namespace liesol {

/// Converts a rational into the working scalar field.
template <typename T>
T scalar_cast(const Rational& q) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(q.get_d());
  } else {
    return T(q);
  }
}

template <typename T>
bool is_zero(const T& v) {
  return v == T{};
}

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = s * a.data_[k];
    return out;
  }
  Mat operator-() const { return scalar_cast<T>(Rational(-1)) * *this; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Mat transposed() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_symmetric() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_zero_matrix() const {
    for (const T& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

template <typename T>
using Vec = std::vector<T>;

/// Dense cube indexed (i, j, k); by convention entry (i,j,k) carries the upper
/// index last, e.g. structure constants c^k_{ij} live at (i,j,k).
template <typename T>
class Ten3 {
 public:
  Ten3() : n_(0) {}
  explicit Ten3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, T{}) {}

  int dim() const { return n_; }
  T& operator()(int i, int j, int k) { return data_[(i * n_ + j) * n_ + k]; }
  const T& operator()(int i, int j, int k) const { return data_[(i * n_ + j) * n_ + k]; }

  bool is_zero_tensor() const {
    for (const T& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const Ten3& a, const Ten3& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  int n_;
  std::vector<T> data_;
};

template <typename T>
class Ten4 {
 public:
  Ten4() : n_(0) {}
  explicit Ten4(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, T{}) {}

  int dim() const { return n_; }
  T& operator()(int i, int j, int k, int l) { return data_[((i * n_ + j) * n_ + k) * n_ + l]; }
  const T& operator()(int i, int j, int k, int l) const {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  bool is_zero_tensor() const {
    for (const T& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

 private:
  int n_;
  std::vector<T> data_;
};

/// Gauss-Jordan inverse. Exact fields pick the first nonzero pivot; floating
/// point uses partial pivoting. Returns nullopt on a singular input.
template <typename T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
  const int n = a.rows();
  Mat<T> m = a;
  Mat<T> inv = Mat<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    if constexpr (std::is_floating_point_v<T>) {
      T best{};
      for (int r = col; r < n; ++r)
        if (std::abs(m(r, col)) > best) best = std::abs(m(r, col)), pivot = r;
    } else {
      for (int r = col; r < n; ++r)
        if (!is_zero(m(r, col))) {
          pivot = r;
          break;
        }
    }
    if (pivot < 0 || is_zero(m(pivot, col))) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const T d = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) = m(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <typename T>
T determinant(const Mat<T>& a) {
  const int n = a.rows();
  Mat<T> m = a;
  T det = T(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return T{};
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const T f = m(r, col) / m(col, col);
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Leading principal minors det(a[0..k][0..k]), k = 1..n.
template <typename T>
Vec<T> leading_principal_minors(const Mat<T>& a) {
  Vec<T> minors;
  for (int k = 1; k <= a.rows(); ++k) {
    Mat<T> sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = a(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(Mat<Rational>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const Rational d = m(row, col);
    for (int j = 0; j < m.cols(); ++j) m(row, j) /= d;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (int j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the rational nullspace of m (as column vectors).
inline std::vector<Vec<Rational>> nullspace(Mat<Rational> m) {
  const int cols = m.cols();
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
Vec<T> mat_vec(const Mat<T>& a, const Vec<T>& v) {
  Vec<T> out(a.rows(), T{});
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

}  // namespace liesol
