// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_RESIDUES_HPP
#define MIRRORLAT_RESIDUES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mirrorlat/connection.hpp"
#include "mirrorlat/errors.hpp"
#include "mirrorlat/qlinalg.hpp"
#include "mirrorlat/root_system.hpp"
#include "mirrorlat/scalar_poly.hpp"

namespace mirrorlat {

// An exact eigenvalue (affine-linear in the orbit weights) together with its
// algebraic multiplicity.
struct SpectrumLine {
  LinForm value;
  int multiplicity = 0;
};

// A residue spectrum: eigenvalues with multiplicities, kept sorted by the
// deterministic LinForm order with equal values merged.
using Spectrum = std::vector<SpectrumLine>;

inline Spectrum normalized(Spectrum s) {
  std::sort(s.begin(), s.end(),
            [](const SpectrumLine& a, const SpectrumLine& b) { return a.value < b.value; });
  Spectrum out;
  for (const auto& line : s) {
    if (line.multiplicity == 0) continue;
    if (!out.empty() && out.back().value == line.value)
      out.back().multiplicity += line.multiplicity;
    else
      out.push_back(line);
  }
  return out;
}

// Multiset equality of spectra.
inline bool same_spectrum(const Spectrum& a, const Spectrum& b) {
  const Spectrum na = normalized(a), nb = normalized(b);
  if (na.size() != nb.size()) return false;
  for (std::size_t i = 0; i < na.size(); ++i)
    if (!(na[i].value == nb[i].value) || na[i].multiplicity != nb[i].multiplicity) return false;
  return true;
}

inline std::string spectrum_str(const Spectrum& s) {
  std::string out;
  for (const auto& line : normalized(s)) {
    if (!out.empty()) out += ", ";
    out += "(" + line.value.str() + ") x " + std::to_string(line.multiplicity);
  }
  return out.empty() ? "(empty)" : out;
}

// Residue along the mirror of a root in the given orbit, acting on the
// (n+1)-dimensional fiber: 2 k_alpha on the coroot line, zero elsewhere.
inline Spectrum mirror_spectrum(const RootSystem& rs, int tag) {
  const LinForm w = rs.orbit_weight(tag);
  return normalized({{Rational(2) * w, 1}, {LinForm{}, rs.rank}});
}

// Residues at the two ends of the projective scaling line: minus the
// identity at t = 0 and plus the identity at t = infinity.
inline Spectrum scaling_end_spectrum(int rank, bool at_infinity) {
  const Rational sign = at_infinity ? Rational(1) : Rational(-1);
  return {{LinForm{sign, Rational(0), Rational(0)}, rank + 1}};
}

namespace detail {

// Exact square root of a non-negative rational; throws if not a perfect
// square (residue eigenvalues would then fail to be linear in the weights).
inline Rational rational_sqrt(const Rational& r) {
  if (r < Rational(0)) throw InconsistencyError("rational_sqrt: negative input " + r.str());
  auto isqrt = [](std::int64_t v) {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
  };
  const std::int64_t sn = isqrt(r.num()), sd = isqrt(r.den());
  if (sn * sn != r.num() || sd * sd != r.den())
    throw InconsistencyError("rational_sqrt: " + r.str() + " is not a perfect square");
  return Rational(sn, sd);
}

// Exact square root of a polynomial that is the square of an affine-linear
// form; the root is normalized to have non-negative leading coefficient.
inline LinForm linform_sqrt(const ScalarPoly& d) {
  LinForm e{Rational(0), Rational(0), Rational(0)};
  if (!d.is_zero()) {
    const Rational c00 = d.coeff(0, 0), c20 = d.coeff(2, 0), c02 = d.coeff(0, 2);
    if (!c00.is_zero()) {
      e.c0 = rational_sqrt(c00);
      e.ck = d.coeff(1, 0) / (Rational(2) * e.c0);
      e.ckp = d.coeff(0, 1) / (Rational(2) * e.c0);
    } else if (!c20.is_zero()) {
      e.ck = rational_sqrt(c20);
      e.ckp = d.coeff(1, 1) / (Rational(2) * e.ck);
    } else {
      e.ckp = rational_sqrt(c02);
    }
  }
  if (!(e.poly() * e.poly() == d))
    throw InconsistencyError("linform_sqrt: discriminant is not the square of a linear form");
  return e;
}

// Reads an affine-linear polynomial into a LinForm; throws on higher-degree
// terms.
inline LinForm linform_of(const ScalarPoly& p) {
  const LinForm f{p.coeff(0, 0), p.coeff(1, 0), p.coeff(0, 1)};
  if (!(f.poly() == p))
    throw InconsistencyError("linform_of: polynomial has degree above one: " + p.str());
  return f;
}

// Exact nullity of m - v*Id; rows are cleared of denominators first so the
// elimination works on integer-seeded entries.
inline std::size_t shifted_nullity(QMat m, const Rational& v) {
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i) m(i, i) -= v;
  for (int i = 0; i < n; ++i) {
    std::int64_t l = 1;
    for (int j = 0; j < n; ++j) l = std::lcm(l, m(i, j).den());
    for (int j = 0; j < n; ++j) m(i, j) *= Rational(l);
  }
  return nullity(m);
}

}  // namespace detail

// The residue endomorphism of the connection along the toric boundary
// divisor attached to the m-th fundamental coweight (0-indexed), acting on
// the (n+1)-dimensional fiber in the basis (simple coroots, scaling slot).
//
// The spectrum is recovered by the four-sample scheme: eigenvalues read off
// at three rational weight points are interpolated to affine-linear forms
// and verified at a fourth, independent point.  Two symbolic routes guard
// the result: the eigen-columns and the coweight eigen-equation are checked
// as exact polynomial identities, and the full matrix must satisfy its
// quadratic characteristic identity sigma^2 - phi sigma + a(p,p) = 0.
class BoundaryResidue {
 public:
  BoundaryResidue(const Connection& conn, int m) : m_(m), n_(conn.root_system().rank) {
    build_matrix(conn);
    extract_phi_symbolic();
    extract_spectrum(conn);
    check_quadratic_identity();
    check_nullities();
  }

  // The residue matrix with exact polynomial entries.
  const Mat<ScalarPoly>& matrix() const { return sigma_; }

  // The residue matrix at a rational weight point.
  QMat matrix_at(const Kappa& kappa) const {
    QMat out(n_ + 1, n_ + 1);
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j) out(i, j) = sigma_(i, j).eval(kappa);
    return out;
  }

  // Eigenvalue of the horizontal block on the coweight line.
  const LinForm& phi() const { return phi_; }

  // The invariant-form scalar a(p, p).
  const ScalarPoly& a_pp() const { return app_; }

  // Discriminant phi^2 - 4 a(p,p) of the characteristic quadratic; when it
  // vanishes identically the two block eigenvalues merge into a Jordan
  // block and the geometric multiplicity drops by one.
  const ScalarPoly& discriminant() const { return disc_; }
  bool has_jordan_block() const { return disc_.is_zero(); }

  // Exact eigenvalues with algebraic multiplicities (at most two lines).
  const Spectrum& spectrum() const { return spectrum_; }

  // Recomputes the symbolic identity sigma^2 - phi sigma + a(p,p) Id = 0.
  bool quadratic_identity_exact() const {
    Mat<ScalarPoly> q = sigma_ * sigma_ - phi_.poly() * sigma_;
    for (int i = 0; i <= n_; ++i) q(i, i) += app_;
    return q.is_zero();
  }

 private:
  void build_matrix(const Connection& conn) {
    sigma_ = Mat<ScalarPoly>(n_ + 1, n_ + 1);
    const Mat<ScalarPoly> block = conn.dunkl_U_poly(m_);
    const std::vector<ScalarPoly> arow = conn.a_row_poly(m_);
    p_ = conn.coweight_coroot_coords(m_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) sigma_(i, j) = block(i, j);
    for (int i = 0; i < n_; ++i) sigma_(i, n_) = ScalarPoly(-p_[i]);
    for (int j = 0; j < n_; ++j) sigma_(n_, j) = arow[j];
    app_ = conn.a_pp_poly(m_);
  }

  // Symbolic route for phi: the coweight must be an exact eigenvector of
  // the horizontal block.
  void extract_phi_symbolic() {
    std::vector<ScalarPoly> image(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) image[i] += sigma_(i, j) * ScalarPoly(p_[j]);
    int pivot = -1;
    for (int i = 0; i < n_; ++i)
      if (!p_[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw InconsistencyError("boundary residue: zero coweight");
    const ScalarPoly phi_poly = ScalarPoly(Rational(1) / p_[pivot]) * image[pivot];
    for (int i = 0; i < n_; ++i)
      if (!(image[i] == phi_poly * ScalarPoly(p_[i])))
        throw InconsistencyError("boundary residue: coweight is not an eigenvector");
    phi_ = detail::linform_of(phi_poly);
  }

  void extract_spectrum(const Connection& conn) {
    static_cast<void>(conn);
    const std::array<Kappa, 3> samples = {Kappa{Rational(1, 5), Rational(1, 7)},
                                          Kappa{Rational(1, 3), Rational(1, 11)},
                                          Kappa{Rational(2, 7), Rational(1, 13)}};
    const Kappa verify{Rational(3, 11), Rational(2, 15)};

    // Symbolic guard: every column away from the coweight node must be an
    // exact eigen-column of the residue matrix.
    for (int j = 0; j < n_; ++j) {
      if (j == m_) continue;
      for (int i = 0; i <= n_; ++i)
        if (i != j && !sigma_(i, j).is_zero())
          throw InconsistencyError("boundary residue: column " + std::to_string(j) +
                                   " is not an eigen-column");
    }

    // Vandermonde-style interpolation matrix for (c0, ck, ckp).
    QMat vm(3, 3);
    for (int s = 0; s < 3; ++s) {
      vm(s, 0) = Rational(1);
      vm(s, 1) = samples[s].k;
      vm(s, 2) = samples[s].kp;
    }
    const QMat vm_inv = inverse(vm);
    auto interpolate = [&vm_inv](const std::array<Rational, 3>& vals) {
      QVec c = vm_inv.apply({vals[0], vals[1], vals[2]});
      return LinForm{c[0], c[1], c[2]};
    };

    std::array<QMat, 3> qs = {matrix_at(samples[0]), matrix_at(samples[1]),
                              matrix_at(samples[2])};
    const QMat qv = matrix_at(verify);

    // Eigenvalues keyed to their eigenvectors: one per off-node coroot
    // column, interpolated across the samples and verified at the fourth.
    lambda_.assign(n_, LinForm{});
    Spectrum lines;
    for (int j = 0; j < n_; ++j) {
      if (j == m_) continue;
      const LinForm lam =
          interpolate({qs[0](j, j), qs[1](j, j), qs[2](j, j)});
      if (lam.eval(verify) != qv(j, j))
        throw InconsistencyError("boundary residue: interpolated eigenvalue fails at the "
                                 "verification point");
      if (!(lam.poly() == sigma_(j, j)))
        throw InconsistencyError("boundary residue: interpolated eigenvalue disagrees with "
                                 "the symbolic diagonal");
      lambda_[j] = lam;
      lines.push_back({lam, 1});
    }

    // The remaining two eigenvalues live on the invariant plane spanned by
    // the coweight and the scaling direction; they are the roots of
    // z^2 - phi z + a(p,p).  phi is recovered by the same sample scheme
    // through the trace and cross-checked against the symbolic route.
    auto trace_phi = [this](const QMat& q) {
      Rational t(0);
      for (int i = 0; i < n_; ++i) t += q(i, i);
      for (int j = 0; j < n_; ++j)
        if (j != m_) t -= q(j, j);
      return t;
    };
    const LinForm phi_interp =
        interpolate({trace_phi(qs[0]), trace_phi(qs[1]), trace_phi(qs[2])});
    if (phi_interp.eval(verify) != trace_phi(qv))
      throw InconsistencyError("boundary residue: interpolated trace fails at the "
                               "verification point");
    if (!(phi_interp == phi_))
      throw InconsistencyError("boundary residue: trace route and eigen-equation route "
                               "disagree on phi");

    disc_ = phi_.poly() * phi_.poly() - Rational(4) * app_;
    const LinForm root = detail::linform_sqrt(disc_);
    const Rational half(1, 2);
    mu_plus_ = half * (phi_ + root);
    mu_minus_ = half * (phi_ - root);
    lines.push_back({mu_plus_, 1});
    lines.push_back({mu_minus_, 1});

    spectrum_ = normalized(lines);
    if (spectrum_.size() > 2)
      throw InconsistencyError("boundary residue: more than two distinct eigenvalues");
  }

  void check_quadratic_identity() const {
    if (!quadratic_identity_exact())
      throw InconsistencyError("boundary residue: quadratic characteristic identity fails");
  }

  // Geometric cross-check: at two rational weight points, the nullity of
  // sigma - v Id must equal the number of eigen-columns carrying v plus one
  // for each root of the block quadratic equal to v (a merged double root
  // contributes a single Jordan vector).
  void check_nullities() const {
    const std::array<Kappa, 2> points = {Kappa{Rational(1, 5), Rational(1, 7)},
                                         Kappa{Rational(3, 11), Rational(2, 15)}};
    for (const Kappa& kappa : points) {
      const QMat q = matrix_at(kappa);
      std::vector<Rational> values;
      for (const auto& line : spectrum_) {
        const Rational v = line.value.eval(kappa);
        if (std::find(values.begin(), values.end(), v) != values.end()) continue;
        values.push_back(v);
        std::size_t expected = 0;
        for (int j = 0; j < n_; ++j)
          if (j != m_ && lambda_[j].eval(kappa) == v) ++expected;
        if (v * v - phi_.eval(kappa) * v + app_.eval(kappa) == Rational(0)) ++expected;
        if (detail::shifted_nullity(q, v) != expected)
          throw InconsistencyError("boundary residue: eigenspace dimension mismatch at a "
                                   "sample point");
      }
    }
  }

  int m_;
  int n_;
  Mat<ScalarPoly> sigma_;
  QVec p_;
  ScalarPoly app_;
  ScalarPoly disc_;
  LinForm phi_;
  std::vector<LinForm> lambda_;
  LinForm mu_plus_;
  LinForm mu_minus_;
  Spectrum spectrum_;
};

// Convenience wrapper: exact spectrum of the boundary residue at the m-th
// fundamental coweight (0-indexed).
inline Spectrum boundary_spectrum(const Connection& conn, int m) {
  return BoundaryResidue(conn, m).spectrum();
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_RESIDUES_HPP
