// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_QLINALG_HPP
#define MIRRORLAT_QLINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mirrorlat/rational.hpp"

namespace mirrorlat {

// Dense matrix over an exact commutative ring T (Rational, ScalarPoly).
// Row-major storage.  Elimination-based queries (rank, inverse, solve)
// require T to be a field and are instantiated with Rational only.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Mat: shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t l = 0; l < x.cols_; ++l) {
        const T& xil = x(i, l);
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xil * y(l, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, const Mat& y) {
    Mat r(y.rows_, y.cols_);
    for (std::size_t i = 0; i < y.a_.size(); ++i) r.a_[i] = s * y.a_[i];
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const T& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat: vector length mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  static Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using QMat = Mat<Rational>;
using QVec = std::vector<Rational>;

inline Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec operator*(const Rational& s, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

inline QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Row-reduces a copy of `m`; returns its rank.
inline std::size_t rank(QMat m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && m(piv, c).is_zero()) ++piv;
    if (piv == nr) continue;
    for (std::size_t j = 0; j < nc; ++j) std::swap(m(r, j), m(piv, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < nc; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < nc; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline std::size_t nullity(const QMat& m) { return m.cols() - rank(m); }

// Gauss-Jordan inverse; throws std::domain_error on singular input.
inline QMat inverse(QMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
  const std::size_t n = m.rows();
  QMat inv = QMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(c, j), m(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const Rational d = Rational(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= d;
      inv(c, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_QLINALG_HPP
