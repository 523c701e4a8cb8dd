// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_HERMITIAN_HPP
#define MIRRORLAT_HERMITIAN_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mirrorlat/cxlinalg.hpp"
#include "mirrorlat/errors.hpp"
#include "mirrorlat/root_system.hpp"
#include "mirrorlat/scalar_poly.hpp"

namespace mirrorlat {

// Invariant Hermitian form of the monodromy on the affine node basis
// e_0..e_n (node 0 carries minus the highest root).
struct HermitianGram {
  CMat entries;            // (n+1) x (n+1), conjugate-symmetric
  std::vector<Cx> q_half;  // exp(-pi i k_j) per affine node
  Mat<long> coxeter;       // affine Coxeter matrix, m_ij in {2,3,4,6}
};

// Worst-case residuals of the defining relations of the reflection
// representation.
struct RelationReport {
  double max_braid = 0.0;
  double max_quadratic = 0.0;
  double max_invariance = 0.0;
  bool ok(double tol) const {
    return max_braid < tol && max_quadratic < tol && max_invariance < tol;
  }
};

// Exact membership test for the restricted weight region: every node weight
// lies in (-1/2, 1/2), with the extra window |k_i - k_j| < 1 - 2/m on even
// edges of label at least four.  The cycle parameter of the A family is
// constrained like a node weight.
inline bool in_restricted_region(const RootSystem& rs, const Kappa& kappa) {
  const Rational half(1, 2);
  if (rs.family == Family::A)
    return kappa.k.abs() < half && kappa.kp.abs() < half;
  const std::vector<LinForm> w = rs.affine_node_weights();
  for (const LinForm& f : w)
    if (!(f.eval(kappa).abs() < half)) return false;
  const Mat<long> m = rs.affine_coxeter_matrix();
  for (int i = 0; i <= rs.rank; ++i)
    for (int j = i + 1; j <= rs.rank; ++j) {
      const long mij = m(i, j);
      if (mij >= 4 && mij % 2 == 0) {
        const Rational gap = (w[i].eval(kappa) - w[j].eval(kappa)).abs();
        if (!(gap < Rational(1) - Rational(2, mij))) return false;
      }
    }
  return true;
}

// Gram matrix of the invariant Hermitian form at real weights (k, kp),
// which need not be rational here.  Diagonal entries are 2 cos(pi k_j);
// off-diagonal entries are -s_ij with s_ij = 0 on non-edges, the real root
// sqrt(2 cos pi(k_i - k_j) + 2 cos(2 pi / m_ij)) on tree edges, and the
// unit phases q'^{-1/2} / q'^{1/2} around the oriented cycle of the A
// family.  A negative square-root argument raises SpecializationDomainError.
inline HermitianGram gram_numeric(const RootSystem& rs, double k, double kp) {
  const int n = rs.rank;
  HermitianGram g;
  g.coxeter = rs.affine_coxeter_matrix();
  g.entries = CMat(n + 1, n + 1);

  const std::vector<LinForm> weights = rs.affine_node_weights();
  std::vector<double> kj(n + 1);
  for (int j = 0; j <= n; ++j)
    kj[j] = weights[j].c0.to_double() + weights[j].ck.to_double() * k +
            weights[j].ckp.to_double() * kp;

  g.q_half.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    g.q_half[j] = std::polar(1.0, -M_PI * kj[j]);
    g.entries(j, j) = Cx(2.0 * std::cos(M_PI * kj[j]), 0.0);
  }

  if (rs.family == Family::A) {
    // All edges of the cycle carry braid label three; the asymmetry sits in
    // the unit phase attached to the orientation 0 -> 1 -> ... -> n -> 0.
    const Cx forward = std::polar(1.0, M_PI * kp);   // q'^{-1/2}
    const Cx backward = std::polar(1.0, -M_PI * kp); // q'^{+1/2}
    for (int i = 0; i <= n; ++i) {
      const int j = (i + 1) % (n + 1);
      g.entries(i, j) = -forward;
      g.entries(j, i) = -backward;
    }
    return g;
  }

  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      const long m = g.coxeter(i, j);
      if (m == 2) continue;
      const double arg = 2.0 * std::cos(M_PI * (kj[i] - kj[j])) +
                         2.0 * std::cos(2.0 * M_PI / static_cast<double>(m));
      if (arg < -1e-12)
        throw SpecializationDomainError(
            "gram: square root argument negative on an edge with label " + std::to_string(m));
      g.entries(i, j) = Cx(-std::sqrt(std::max(arg, 0.0)), 0.0);
    }
  return g;
}

// Gram matrix at a rational weight point; the point must lie in the
// restricted region.
inline HermitianGram gram(const RootSystem& rs, const Kappa& kappa) {
  if (!in_restricted_region(rs, kappa))
    throw SpecializationDomainError("gram: weight point outside the restricted region");
  return gram_numeric(rs, kappa.k.to_double(), kappa.kp.to_double());
}

// Generators of the reflection representation: T_j maps e_i to
// e_i - q_j^{1/2} h_ij e_j, so it fixes the h-orthogonal hyperplane of e_j
// and scales e_j by -q_j.  The scalar must carry the phase of the target
// node j: with q_j^{1/2} the form invariance T^t h conj(T) = h is an exact
// identity for any conjugate-symmetric Gram matrix, whereas a source-node
// phase breaks it on every edge joining nodes of different weights.
inline std::vector<CMat> reflection_matrices(const HermitianGram& g) {
  const std::size_t dim = g.entries.rows();
  std::vector<CMat> gens(dim, CMat::identity(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i)
      gens[j](j, i) -= g.q_half[j] * g.entries(i, j);
  return gens;
}

// Alternating product of `m` factors starting with `a`: a b a b ...
inline CMat alternating_product(const CMat& a, const CMat& b, long m) {
  CMat out = CMat::identity(a.rows());
  for (long i = 0; i < m; ++i) out = out * (i % 2 == 0 ? a : b);
  return out;
}

// Residuals of the braid, quadratic, and form-invariance relations for the
// generators attached to a Gram matrix.  The invariant pairing is
// conjugate-linear in its second argument, so the matrix statement reads
// T^t h conj(T) = h; for a real Gram matrix this coincides with the more
// familiar T* h T = h.
inline RelationReport relation_checks(const HermitianGram& g) {
  const std::vector<CMat> t = reflection_matrices(g);
  const std::size_t dim = g.entries.rows();
  RelationReport report;

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const long m = g.coxeter(i, j);
      const CMat diff =
          alternating_product(t[i], t[j], m) - alternating_product(t[j], t[i], m);
      report.max_braid = std::max(report.max_braid, diff.max_abs());
    }

  const CMat id = CMat::identity(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Cx qj = g.q_half[j] * g.q_half[j];
    const CMat quad = (t[j] - id) * (t[j] + qj * id);
    report.max_quadratic = std::max(report.max_quadratic, quad.max_abs());
    const CMat inv = t[j].transpose() * g.entries * t[j].conjugate() - g.entries;
    report.max_invariance = std::max(report.max_invariance, inv.max_abs());
  }
  return report;
}

// The two standard rank-two complex reflections used by the braid-relation
// criterion: upper has eigenvector e_1 with eigenvalue -q_1 and coupling d_1,
// lower is its transpose-shaped partner.
inline CMat reflection2_upper(Cx q1, Cx d1) {
  CMat s(2, 2);
  s(0, 0) = -q1;
  s(0, 1) = d1;
  s(1, 1) = Cx(1.0, 0.0);
  return s;
}
inline CMat reflection2_lower(Cx q2, Cx d2) {
  CMat s(2, 2);
  s(0, 0) = Cx(1.0, 0.0);
  s(1, 0) = d2;
  s(1, 1) = -q2;
  return s;
}

// Numeric test of the rank-two braid relation of length m.
inline bool braid_relation_holds_2x2(Cx q1, Cx q2, Cx d1, Cx d2, long m, double tol = 1e-9) {
  const CMat s1 = reflection2_upper(q1, d1), s2 = reflection2_lower(q2, d2);
  return (alternating_product(s1, s2, m) - alternating_product(s2, s1, m)).max_abs() < tol;
}

// The (x, y) pair entering the closed determinant formula of the families
// with a two-orbit-flavoured form (A, B, C, F, G), as exact rationals.
inline std::pair<Rational, Rational> det_xy(const RootSystem& rs, const Kappa& kappa) {
  const Rational k = kappa.k, kp = kappa.kp, nr(rs.rank);
  switch (rs.family) {
    case Family::A:
      return {(nr + 1) * (k + kp) / Rational(2), (nr + 1) * (k - kp) / Rational(2)};
    case Family::B:
      return {(nr - 2) * k + kp, Rational(2) * k};
    case Family::C:
      return {(nr - 2) * k + Rational(2) * kp, k};
    case Family::F:
      return {k + kp, Rational(2) * k + kp};
    case Family::G:
      return {(k + Rational(3) * kp) / Rational(2), (k + kp) / Rational(2)};
    default:
      throw UnsupportedTypeError("det_xy: no (x, y) data for the D and E families");
  }
}

// Exponent data of the product formula for the simply-laced D and E
// determinants: 2^{n+1} prod_j (cos(pi k) - cos(pi m_j / h)).
inline std::pair<long, std::vector<long>> det_exponent_data(const RootSystem& rs) {
  switch (rs.family) {
    case Family::D: {
      const long h = 2L * (rs.rank - 2);
      std::vector<long> m;
      for (long v = 0; v <= h; v += 2) m.push_back(v);
      m.push_back(rs.rank - 2);
      m.push_back(rs.rank - 2);
      return {h, m};
    }
    case Family::E:
      if (rs.rank == 6) return {6, {0, 2, 2, 3, 4, 4, 6}};
      if (rs.rank == 7) return {12, {0, 3, 4, 6, 6, 8, 9, 12}};
      return {30, {0, 6, 10, 12, 15, 18, 20, 24, 30}};
    default:
      throw UnsupportedTypeError("det_exponent_data: only defined for the D and E families");
  }
}

// Closed form of det h(kappa): -4 sin(pi x) sin(pi y) for A/B/C/F/G and the
// cosine product formula for D/E.
inline double det_closed_form(const RootSystem& rs, const Kappa& kappa) {
  if (rs.family == Family::D || rs.family == Family::E) {
    const auto [h, m] = det_exponent_data(rs);
    const double ck = std::cos(M_PI * kappa.k.to_double());
    double prod = std::pow(2.0, rs.rank + 1);
    for (long mj : m)
      prod *= ck - std::cos(M_PI * static_cast<double>(mj) / static_cast<double>(h));
    return prod;
  }
  const auto [x, y] = det_xy(rs, kappa);
  return -4.0 * std::sin(M_PI * x.to_double()) * std::sin(M_PI * y.to_double());
}

// |numeric determinant - closed form|; the numeric determinant of a
// Hermitian matrix must be real, which is verified as a cross-check.
inline double det_compare(const RootSystem& rs, const Kappa& kappa) {
  const HermitianGram g = gram(rs, kappa);
  const Cx det = det_lu(g.entries);
  if (std::abs(det.imag()) > 1e-9 * (1.0 + std::abs(det)))
    throw InconsistencyError("det_compare: Hermitian determinant has an imaginary part");
  return std::abs(det.real() - det_closed_form(rs, kappa));
}

inline Signature gram_signature(const HermitianGram& g, double tol_rel = 1e-8) {
  return signature_of(g.entries, tol_rel);
}

// Exact membership in the hyperbolic weight region, where the form has
// Lorentz signature (n, 1).
inline bool in_hyperbolic_region(const RootSystem& rs, const Kappa& kappa) {
  if (!in_restricted_region(rs, kappa)) return false;
  if (rs.family == Family::D || rs.family == Family::E) {
    const Rational bound(1, rs.rank - (rs.family == Family::D ? 2 : 3));
    return Rational(0) < kappa.k && kappa.k < bound;
  }
  const auto [x, y] = det_xy(rs, kappa);
  return Rational(0) < x && x < Rational(1) && Rational(0) < y && y < Rational(1);
}

// Signature of the dual form det(h) h^{-1}, which flips a Lorentz signature
// (n, 1) to (1, n) and preserves definiteness.
inline Signature dual_form_signature(const HermitianGram& g, double tol_rel = 1e-8) {
  const std::size_t dim = g.entries.rows();
  const Cx det = det_lu(g.entries);
  const double scale = std::max(g.entries.max_abs(), 1e-30);
  if (std::abs(det) < 1e-10 * std::pow(scale, static_cast<double>(dim)))
    throw SingularFormError("dual_form_signature: form is numerically singular");
  return signature_of(det.real() * inverse(g.entries), tol_rel);
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_HERMITIAN_HPP
