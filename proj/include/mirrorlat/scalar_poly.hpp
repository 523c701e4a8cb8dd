// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_SCALAR_POLY_HPP
#define MIRRORLAT_SCALAR_POLY_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mirrorlat/rational.hpp"

namespace mirrorlat {

// A multiplicity parameter point: one weight per mirror orbit.  `k` is the
// weight on the orbit of the first simple root, `kp` the weight on the other
// orbit (ignored by simply laced types, which have a single orbit).
struct Kappa {
  Rational k;
  Rational kp;
  friend bool operator==(const Kappa& a, const Kappa& b) {
    return a.k == b.k && a.kp == b.kp;
  }
};

// Exact polynomial in the two orbit weights (k, kp) with rational
// coefficients and unbounded total degree.  Sparse map keyed by exponent
// pair; zero coefficients are never stored, so equality is structural.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  ScalarPoly(const Rational& c) { set(0, 0, c); }  // NOLINT: implicit by design

  static ScalarPoly var_k() {
    ScalarPoly p;
    p.set(1, 0, Rational(1));
    return p;
  }
  static ScalarPoly var_kp() {
    ScalarPoly p;
    p.set(0, 1, Rational(1));
    return p;
  }

  void set(int dk, int dkp, const Rational& c) {
    if (c.is_zero())
      coeff_.erase({dk, dkp});
    else
      coeff_[{dk, dkp}] = c;
  }
  Rational coeff(int dk, int dkp) const {
    auto it = coeff_.find({dk, dkp});
    return it == coeff_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return coeff_.empty(); }

  friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r = a;
    for (const auto& [e, c] : b.coeff_) r.set(e.first, e.second, r.coeff(e.first, e.second) + c);
    return r;
  }
  friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r = a;
    for (const auto& [e, c] : b.coeff_) r.set(e.first, e.second, r.coeff(e.first, e.second) - c);
    return r;
  }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r;
    for (const auto& [ea, ca] : a.coeff_)
      for (const auto& [eb, cb] : b.coeff_) {
        const int dk = ea.first + eb.first, dkp = ea.second + eb.second;
        r.set(dk, dkp, r.coeff(dk, dkp) + ca * cb);
      }
    return r;
  }
  ScalarPoly operator-() const { return ScalarPoly() - *this; }
  ScalarPoly& operator+=(const ScalarPoly& b) { return *this = *this + b; }
  ScalarPoly& operator-=(const ScalarPoly& b) { return *this = *this - b; }
  ScalarPoly& operator*=(const ScalarPoly& b) { return *this = *this * b; }

  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

  Rational eval(const Kappa& kappa) const {
    Rational acc(0);
    for (const auto& [e, c] : coeff_) {
      Rational term = c;
      for (int i = 0; i < e.first; ++i) term *= kappa.k;
      for (int j = 0; j < e.second; ++j) term *= kappa.kp;
      acc += term;
    }
    return acc;
  }

  std::string str() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeff_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (e.first > 0) out += "*k^" + std::to_string(e.first);
      if (e.second > 0) out += "*kp^" + std::to_string(e.second);
    }
    return out;
  }

 private:
  // Exponent order is irrelevant for correctness; std::map keeps printing
  // and comparison deterministic.
  std::map<std::pair<int, int>, Rational> coeff_;
};

// Affine-linear exact expression c0 + ck*k + ckp*kp.  This is the carrier
// for residue eigenvalues and exponent tables, where closed forms are linear
// in the orbit weights.
struct LinForm {
  Rational c0;
  Rational ck;
  Rational ckp;

  Rational eval(const Kappa& kappa) const { return c0 + ck * kappa.k + ckp * kappa.kp; }

  ScalarPoly poly() const {
    ScalarPoly p(c0);
    p.set(1, 0, ck);
    p.set(0, 1, ckp);
    return p;
  }

  friend LinForm operator+(const LinForm& a, const LinForm& b) {
    return {a.c0 + b.c0, a.ck + b.ck, a.ckp + b.ckp};
  }
  friend LinForm operator-(const LinForm& a, const LinForm& b) {
    return {a.c0 - b.c0, a.ck - b.ck, a.ckp - b.ckp};
  }
  LinForm operator-() const { return {-c0, -ck, -ckp}; }
  friend LinForm operator*(const Rational& s, const LinForm& a) {
    return {s * a.c0, s * a.ck, s * a.ckp};
  }
  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.c0 == b.c0 && a.ck == b.ck && a.ckp == b.ckp;
  }
  friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }
  // Lexicographic order; used only to make printed spectra deterministic.
  friend bool operator<(const LinForm& a, const LinForm& b) {
    if (a.c0 != b.c0) return a.c0 < b.c0;
    if (a.ck != b.ck) return a.ck < b.ck;
    return a.ckp < b.ckp;
  }

  // Human-readable rendering such as "-2*k - kp" or "1/2 - k".
  std::string str() const {
    std::string out;
    auto append = [&out](const Rational& c, const std::string& var) {
      if (c.is_zero()) return;
      Rational a = c.abs();
      std::string mag = a == Rational(1) && !var.empty() ? var
                        : var.empty()                    ? a.str()
                                                         : a.str() + "*" + var;
      if (out.empty())
        out += (c < Rational(0) ? "-" : "") + mag;
      else
        out += (c < Rational(0) ? " - " : " + ") + mag;
    };
    append(c0, "");
    append(ck, "k");
    append(ckp, "kp");
    return out.empty() ? "0" : out;
  }
};

inline std::ostream& operator<<(std::ostream& os, const LinForm& f) { return os << f.str(); }

}  // namespace mirrorlat

#endif  // MIRRORLAT_SCALAR_POLY_HPP
