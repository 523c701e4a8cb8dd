// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_ROOT_SYSTEM_HPP
#define MIRRORLAT_ROOT_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mirrorlat/errors.hpp"
#include "mirrorlat/qlinalg.hpp"
#include "mirrorlat/scalar_poly.hpp"

namespace mirrorlat {

enum class Family { A, B, C, D, E, F, G };

inline char family_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family family_from_char(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') throw UnsupportedTypeError(std::string("unknown family '") + c + "'");
  return static_cast<Family>(c - 'A');
}

// Catalogue of supported irreducible types, in the fixed order used by table
// emitters and batch commands.
inline const std::vector<std::pair<Family, int>>& supported_types() {
  static const std::vector<std::pair<Family, int>> list = [] {
    std::vector<std::pair<Family, int>> v;
    for (int n = 2; n <= 9; ++n) v.emplace_back(Family::A, n);
    for (int n = 2; n <= 7; ++n) v.emplace_back(Family::B, n);
    for (int n = 2; n <= 7; ++n) v.emplace_back(Family::C, n);
    for (int n = 4; n <= 8; ++n) v.emplace_back(Family::D, n);
    for (int n = 6; n <= 8; ++n) v.emplace_back(Family::E, n);
    v.emplace_back(Family::F, 4);
    v.emplace_back(Family::G, 2);
    return v;
  }();
  return list;
}

inline std::string supported_types_str() {
  std::string s;
  for (const auto& [f, n] : supported_types()) {
    if (!s.empty()) s += ", ";
    s += family_char(f) + std::to_string(n);
  }
  return s;
}

// An irreducible crystallographic root system realized over the rationals in
// Bourbaki ambient coordinates, together with the derived data the rest of
// the toolkit consumes: coroots, Cartan matrix and its inverse, fundamental
// coweights, mirror-orbit tags, and the highest root.
//
// Orbit tags: tag 0 is the W-orbit of the first simple root (weight k),
// tag 1 the other orbit if present (weight kp).  In an irreducible system
// the orbits coincide with the (at most two) root length classes.
class RootSystem {
 public:
  Family family;
  int rank = 0;
  int ambient = 0;

  std::vector<QVec> simple;           // alpha_1..alpha_n
  std::vector<QVec> simple_coroot;    // alpha_i^vee = 2 alpha_i/(alpha_i,alpha_i)
  std::vector<QVec> positive;         // sorted by (height, coords)
  std::vector<QVec> positive_coroot;  // aligned with `positive`
  std::vector<std::vector<long>> positive_coords;  // root-basis coordinates
  std::vector<int> orbit_tag;         // aligned with `positive`
  QMat cartan;                        // C_ij = (alpha_i, alpha_j^vee)
  QMat cartan_inv;
  QMat coroot_gram;                   // G_ij = (alpha_i^vee, alpha_j^vee)
  std::vector<QVec> coweight;         // fundamental coweights w_1..w_n
  QVec highest_root;
  int highest_root_index = -1;

  static RootSystem build(Family family, int rank) {
    if (!is_supported(family, rank))
      throw UnsupportedTypeError("unsupported type " + std::string(1, family_char(family)) +
                                 std::to_string(rank) + "; supported: " + supported_types_str());
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.simple = simple_roots(family, rank);
    rs.ambient = static_cast<int>(rs.simple[0].size());
    rs.close_roots();
    rs.derive_data();
    return rs;
  }

  static bool is_supported(Family family, int rank) {
    const auto& list = supported_types();
    return std::find(list.begin(), list.end(), std::make_pair(family, rank)) != list.end();
  }

  std::string name() const { return family_char(family) + std::to_string(rank); }

  std::size_t num_positive() const { return positive.size(); }

  bool two_orbits() const {
    return family == Family::B || family == Family::C || family == Family::F ||
           family == Family::G;
  }

  // Orbit weight as an exact linear form in (k, kp).
  LinForm orbit_weight(int tag) const {
    if (tag == 0) return LinForm{Rational(0), Rational(1), Rational(0)};
    return LinForm{Rational(0), Rational(0), Rational(1)};
  }
  LinForm root_weight(std::size_t pos_index) const { return orbit_weight(orbit_tag[pos_index]); }

  // Number of positive roots in each orbit ({all, 0} for one-orbit types).
  std::pair<int, int> orbit_sizes() const {
    int n0 = 0, n1 = 0;
    for (int t : orbit_tag) (t == 0 ? n0 : n1)++;
    return {n0, n1};
  }

  // gamma = sum over positive roots of (alpha, alpha) / rank; this is the
  // ratio between the W-invariant form sum d alpha (x) d alpha and the
  // ambient inner product.
  Rational gamma() const {
    Rational s(0);
    for (const QVec& a : positive) s += dot(a, a);
    return s / Rational(rank);
  }

  // Coxeter number h = |R| / rank.
  long coxeter_number() const { return static_cast<long>(2 * positive.size()) / rank; }

  // Coordinates of an ambient vector x (lying in the root span) in the
  // simple coroot basis: x = sum_i c_i alpha_i^vee.
  QVec coroot_coords(const QVec& x) const {
    QVec y(rank);
    for (int j = 0; j < rank; ++j) y[j] = dot(simple[j], x);
    return cartan_inv.apply(y);
  }

  // Ambient vector from simple coroot coordinates.
  QVec from_coroot_coords(const QVec& c) const {
    QVec x(ambient, Rational(0));
    for (int i = 0; i < rank; ++i) x = x + c[i] * simple_coroot[i];
    return x;
  }

  // Pairing alpha(x) = (alpha_vec, x) for the positive root at `pos_index`.
  Rational root_on(std::size_t pos_index, const QVec& x) const {
    return dot(positive[pos_index], x);
  }

  // Affine Coxeter matrix on nodes {0..rank}: node 0 carries -highest_root,
  // node i >= 1 carries alpha_i.  Entry m_ij in {2,3,4,6} is derived from
  // the integer product c = beta_i(beta_j^vee) beta_j(beta_i^vee), which for
  // distinct nodes of these diagrams is always in {0,1,2,3}.
  Mat<long> affine_coxeter_matrix() const {
    const int n = rank;
    std::vector<QVec> node(n + 1), node_coroot(n + 1);
    node[0] = Rational(-1) * highest_root;
    node_coroot[0] = coroot_of(node[0]);
    for (int i = 1; i <= n; ++i) {
      node[i] = simple[i - 1];
      node_coroot[i] = simple_coroot[i - 1];
    }
    Mat<long> m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (i == j) {
          m(i, j) = 1;
          continue;
        }
        const Rational c = dot(node[i], node_coroot[j]) * dot(node[j], node_coroot[i]);
        if (!c.is_integer() || c < Rational(0) || c > Rational(3))
          throw InconsistencyError(name() + ": affine bond product " + c.str() +
                                   " outside {0,1,2,3}");
        static const long table[4] = {2, 3, 4, 6};
        m(i, j) = table[c.num()];
      }
    return m;
  }

  // Orbit weight of each affine node (node 0 inherits the highest root's
  // orbit), as linear forms in (k, kp).
  std::vector<LinForm> affine_node_weights() const {
    std::vector<LinForm> w(rank + 1);
    w[0] = orbit_weight(orbit_tag[highest_root_index]);
    for (int i = 1; i <= rank; ++i) w[i] = orbit_weight(tag_of(simple[i - 1]));
    return w;
  }

  // All rank-2 subsystems: for every 2-plane spanned by positive roots, the
  // sorted list of indices of the positive roots it contains.  Planes are
  // keyed by the reduced row echelon form of a spanning pair, which is a
  // canonical representation of the row space.
  std::vector<std::vector<int>> rank2_subsystems() const {
    std::map<std::vector<Rational>, std::set<int>> planes;
    const std::size_t np = positive.size();
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = i + 1; j < np; ++j) {
        std::vector<Rational> key = plane_key(positive[i], positive[j]);
        auto& bucket = planes[std::move(key)];
        bucket.insert(static_cast<int>(i));
        bucket.insert(static_cast<int>(j));
      }
    std::vector<std::vector<int>> out;
    out.reserve(planes.size());
    for (const auto& [key, bucket] : planes) out.emplace_back(bucket.begin(), bucket.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  QVec coroot_of(const QVec& root) const {
    const Rational len2 = dot(root, root);
    return (Rational(2) / len2) * root;
  }

  int tag_of(const QVec& root) const {
    return dot(root, root) == dot(simple[0], simple[0]) ? 0 : 1;
  }

 private:
  static QVec qv(std::initializer_list<Rational> vals) { return QVec(vals); }

  static std::vector<QVec> simple_roots(Family family, int n) {
    std::vector<QVec> s;
    auto eps_diff = [](int dim, int i, int j) {  // epsilon_i - epsilon_j, 0-based
      QVec v(dim, Rational(0));
      v[i] = Rational(1);
      v[j] = Rational(-1);
      return v;
    };
    switch (family) {
      case Family::A: {  // in the sum-zero hyperplane of R^{n+1}
        for (int i = 0; i < n; ++i) s.push_back(eps_diff(n + 1, i, i + 1));
        break;
      }
      case Family::B: {
        for (int i = 0; i + 1 < n; ++i) s.push_back(eps_diff(n, i, i + 1));
        QVec last(n, Rational(0));
        last[n - 1] = Rational(1);
        s.push_back(last);
        break;
      }
      case Family::C: {
        for (int i = 0; i + 1 < n; ++i) s.push_back(eps_diff(n, i, i + 1));
        QVec last(n, Rational(0));
        last[n - 1] = Rational(2);
        s.push_back(last);
        break;
      }
      case Family::D: {
        for (int i = 0; i + 1 < n; ++i) s.push_back(eps_diff(n, i, i + 1));
        QVec last(n, Rational(0));
        last[n - 2] = Rational(1);
        last[n - 1] = Rational(1);
        s.push_back(last);
        break;
      }
      case Family::E: {  // E_n as the first n Bourbaki E_8 simple roots, in R^8
        QVec a1(8, Rational(-1, 2));
        a1[0] = Rational(1, 2);
        a1[7] = Rational(1, 2);
        QVec a2(8, Rational(0));
        a2[0] = Rational(1);
        a2[1] = Rational(1);
        s = {a1, a2};
        for (int i = 3; i <= n; ++i) s.push_back(eps_diff(8, i - 2, i - 3));
        break;
      }
      case Family::F: {  // n == 4
        s.push_back(eps_diff(4, 1, 2));
        s.push_back(eps_diff(4, 2, 3));
        QVec a3(4, Rational(0));
        a3[3] = Rational(1);
        s.push_back(a3);
        s.push_back(qv({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}));
        break;
      }
      case Family::G: {  // n == 2, in the sum-zero hyperplane of R^3
        s.push_back(qv({Rational(1), Rational(-1), Rational(0)}));
        s.push_back(qv({Rational(-2), Rational(1), Rational(1)}));
        break;
      }
    }
    return s;
  }

  // Orbit of the simple roots under simple reflections; since every root is
  // conjugate to a simple root, this is the whole system.
  void close_roots() {
    std::set<QVec> roots(simple.begin(), simple.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<QVec> snapshot(roots.begin(), roots.end());
      for (const QVec& beta : snapshot)
        for (const QVec& alpha : simple) {
          const Rational c = Rational(2) * dot(alpha, beta) / dot(alpha, alpha);
          QVec reflected = beta - c * alpha;
          if (roots.insert(std::move(reflected)).second) grew = true;
        }
    }

    // Split off positives by root-basis coordinates (all >= 0), recording
    // the integer coordinates and sorting by height for a stable order.
    QMat gram(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) gram(i, j) = dot(simple[i], simple[j]);
    const QMat gram_inv = inverse(gram);

    struct Entry {
      long height;
      std::vector<long> coords;
      QVec vec;
      bool operator<(const Entry& o) const {
        return std::tie(height, coords) < std::tie(o.height, o.coords);
      }
    };
    std::vector<Entry> pos;
    for (const QVec& beta : roots) {
      QVec rhs(rank);
      for (int i = 0; i < rank; ++i) rhs[i] = dot(simple[i], beta);
      const QVec c = gram_inv.apply(rhs);
      bool nonneg = true, nonpos = true;
      std::vector<long> ic(rank);
      long height = 0;
      for (int i = 0; i < rank; ++i) {
        if (!c[i].is_integer())
          throw InconsistencyError(name() + ": non-integral root coordinate " + c[i].str());
        ic[i] = c[i].num();
        height += ic[i];
        nonneg = nonneg && ic[i] >= 0;
        nonpos = nonpos && ic[i] <= 0;
      }
      if (!nonneg && !nonpos)
        throw InconsistencyError(name() + ": mixed-sign root coordinates");
      if (nonneg) pos.push_back({height, std::move(ic), beta});
    }
    std::sort(pos.begin(), pos.end());
    for (Entry& e : pos) {
      positive.push_back(std::move(e.vec));
      positive_coords.push_back(std::move(e.coords));
    }
    if (2 * positive.size() != roots.size())
      throw InconsistencyError(name() + ": positive roots are not half of all roots");
  }

  void derive_data() {
    const int n = rank;
    simple_coroot.resize(n);
    for (int i = 0; i < n; ++i) simple_coroot[i] = coroot_of(simple[i]);

    positive_coroot.resize(positive.size());
    orbit_tag.resize(positive.size());
    for (std::size_t a = 0; a < positive.size(); ++a) {
      positive_coroot[a] = coroot_of(positive[a]);
      orbit_tag[a] = tag_of(positive[a]);
    }

    cartan = QMat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cartan(i, j) = dot(simple[i], simple_coroot[j]);
        if (!cartan(i, j).is_integer())
          throw InconsistencyError(name() + ": non-integral Cartan entry");
      }
    cartan_inv = inverse(cartan);

    coroot_gram = QMat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) coroot_gram(i, j) = dot(simple_coroot[i], simple_coroot[j]);

    // Fundamental coweights: alpha_i(w_m) = delta_im.  Writing
    // w_m = sum_l c_l alpha_l^vee and pairing with alpha_i gives
    // sum_l C_il c_l = delta_im, i.e. c = column m of C^{-1}.
    coweight.resize(n);
    for (int m = 0; m < n; ++m) {
      QVec c(n);
      for (int l = 0; l < n; ++l) c[l] = cartan_inv(l, m);
      coweight[m] = from_coroot_coords(c);
    }

    // Highest root: unique root of maximal height; double-check dominance.
    highest_root_index = static_cast<int>(positive.size()) - 1;
    highest_root = positive.back();
    for (int i = 0; i < n; ++i)
      if (dot(highest_root, simple_coroot[i]) < Rational(0))
        throw InconsistencyError(name() + ": highest root is not dominant");
  }

  // Canonical key for the plane spanned by two independent vectors: the
  // reduced row echelon form of the 2 x ambient stack.
  std::vector<Rational> plane_key(const QVec& a, const QVec& b) const {
    QMat m(2, ambient);
    for (int j = 0; j < ambient; ++j) {
      m(0, j) = a[j];
      m(1, j) = b[j];
    }
    std::size_t row = 0;
    for (int c = 0; c < ambient && row < 2; ++c) {
      std::size_t piv = row;
      while (piv < 2 && m(piv, c).is_zero()) ++piv;
      if (piv == 2) continue;
      for (int j = 0; j < ambient; ++j) std::swap(m(row, j), m(piv, j));
      const Rational inv = Rational(1) / m(row, c);
      for (int j = 0; j < ambient; ++j) m(row, j) *= inv;
      for (std::size_t i = 0; i < 2; ++i) {
        if (i == row || m(i, c).is_zero()) continue;
        const Rational f = m(i, c);
        for (int j = 0; j < ambient; ++j) m(i, j) -= f * m(row, j);
      }
      ++row;
    }
    if (row != 2)
      throw InconsistencyError(name() + ": proportional roots in a spanning pair");
    std::vector<Rational> key;
    key.reserve(2 * ambient);
    for (std::size_t i = 0; i < 2; ++i)
      for (int j = 0; j < ambient; ++j) key.push_back(m(i, j));
    return key;
  }
};

}  // namespace mirrorlat

#endif  // MIRRORLAT_ROOT_SYSTEM_HPP
