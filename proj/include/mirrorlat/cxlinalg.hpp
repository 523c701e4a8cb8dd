// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_CXLINALG_HPP
#define MIRRORLAT_CXLINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mirrorlat {

using Cx = std::complex<double>;

// Dense complex matrix, row-major.  Dimensions in this project are tiny
// (rank+1 <= 9), so nothing beyond partial pivoting is needed.
class CMat {
 public:
  CMat() : rows_(0), cols_(0) {}
  CMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static CMat identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend CMat operator+(const CMat& x, const CMat& y) {
    CMat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend CMat operator-(const CMat& x, const CMat& y) {
    CMat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend CMat operator*(const CMat& x, const CMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("CMat: shape mismatch");
    CMat r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t l = 0; l < x.cols_; ++l) {
        const Cx xil = x(i, l);
        if (xil == Cx(0.0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xil * y(l, j);
      }
    return r;
  }
  friend CMat operator*(Cx s, const CMat& y) {
    CMat r(y.rows_, y.cols_);
    for (std::size_t i = 0; i < y.a_.size(); ++i) r.a_[i] = s * y.a_[i];
    return r;
  }

  CMat adjoint() const {
    CMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  CMat transpose() const {
    CMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  CMat conjugate() const {
    CMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
    return r;
  }

  double frobenius() const {
    double s = 0.0;
    for (const Cx& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double s = 0.0;
    for (const Cx& v : a_) s = std::max(s, std::abs(v));
    return s;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Cx> a_;
};

// Determinant via partial-pivot LU decomposition.
inline Cx det_lu(CMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_lu: square matrix required");
  const std::size_t n = m.rows();
  Cx d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(m(i, c)) > std::abs(m(piv, c))) piv = i;
    if (std::abs(m(piv, c)) == 0.0) return Cx(0.0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Cx f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

// Gauss-Jordan inverse with partial pivoting.
inline CMat inverse(CMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
  const std::size_t n = m.rows();
  CMat inv = CMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(m(i, c)) > std::abs(m(piv, c))) piv = i;
    if (std::abs(m(piv, c)) == 0.0) throw std::domain_error("inverse: singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(c, j), m(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    const Cx d = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const Cx f = m(i, c);
      if (f == Cx(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Eigenvalues of a Hermitian matrix by cyclic Jacobi with phase-adjusted
// rotations.  Each step zeroes one off-diagonal pair exactly; sweeps repeat
// until the off-diagonal mass is negligible.  Returns eigenvalues sorted
// ascending.  Throws if the input is not Hermitian to working precision.
inline std::vector<double> hermitian_eigenvalues(CMat h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eigenvalues: square matrix required");
  const std::size_t n = h.rows();
  const double scale = std::max(h.frobenius(), 1e-300);
  if ((h - h.adjoint()).frobenius() > 1e-10 * scale)
    throw std::invalid_argument("eigenvalues: matrix is not Hermitian");
  // Exact symmetrization removes roundoff-sized anti-Hermitian noise.
  h = Cx(0.5) * (h + h.adjoint());

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += std::norm(h(i, j));
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-14 * scale; ++sweep) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(h(p, q));
        if (r <= 1e-300) continue;
        // Factor out the phase so the 2x2 block is real symmetric, then
        // apply the classical Jacobi rotation to annihilate it.
        const Cx phase = h(p, q) / r;  // e^{i theta}
        const double a = h(p, p).real(), b = h(q, q).real();
        const double tau = (b - a) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U columns: U[:,p] = (c, -s*conj(phase)), U[:,q] = (s, c*conj(phase))
        for (std::size_t i = 0; i < n; ++i) {
          const Cx hip = h(i, p), hiq = h(i, q);
          h(i, p) = c * hip - s * std::conj(phase) * hiq;
          h(i, q) = s * hip + c * std::conj(phase) * hiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Cx hpj = h(p, j), hqj = h(q, j);
          h(p, j) = c * hpj - s * phase * hqj;
          h(q, j) = s * hpj + c * phase * hqj;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = Cx(h(p, p).real(), 0.0);
        h(q, q) = Cx(h(q, q).real(), 0.0);
      }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Inertia of a Hermitian matrix: eigenvalue counts (positive, negative,
// zero) with |lambda| <= tol_rel * max|lambda| classified as zero.
struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.n_plus == b.n_plus && a.n_minus == b.n_minus && a.n_zero == b.n_zero;
  }
};

inline Signature signature_of(const CMat& h, double tol_rel = 1e-8) {
  const std::vector<double> ev = hermitian_eigenvalues(h);
  double top = 0.0;
  for (double v : ev) top = std::max(top, std::abs(v));
  const double tol = tol_rel * std::max(top, 1e-300);
  Signature s;
  for (double v : ev) {
    if (std::abs(v) <= tol)
      ++s.n_zero;
    else if (v > 0.0)
      ++s.n_plus;
    else
      ++s.n_minus;
  }
  return s;
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_CXLINALG_HPP
