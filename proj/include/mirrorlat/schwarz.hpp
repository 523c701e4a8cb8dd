// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_SCHWARZ_HPP
#define MIRRORLAT_SCHWARZ_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mirrorlat/errors.hpp"
#include "mirrorlat/hermitian.hpp"
#include "mirrorlat/root_system.hpp"
#include "mirrorlat/scalar_poly.hpp"

namespace mirrorlat {

// Relative exponents along the three kinds of boundary strata of the
// compactified quotient: the toric strata at the extremal one-parameter
// directions, the reflection mirrors, and the (blown-up) identity element.
struct ExponentRecord {
  std::vector<LinForm> toric;
  std::vector<LinForm> mirror;
  LinForm identity;
};

// Closed-form exponent table per family.  The identity entry always equals
// (1/n) * sum_{alpha > 0} k_alpha - 1/2, and each toric entry is, up to
// sign, the difference of the two residue eigenvalue lines at an extremal
// fundamental coweight.
inline ExponentRecord relative_exponents(const RootSystem& rs) {
  const Rational n(rs.rank);
  const Rational h(rs.coxeter_number());
  const LinForm k{Rational(0), Rational(1), Rational(0)};
  const LinForm kp{Rational(0), Rational(0), Rational(1)};
  const LinForm half{Rational(1, 2), Rational(0), Rational(0)};

  ExponentRecord rec;
  switch (rs.family) {
    case Family::A:
      rec.toric = {Rational(1, 2) * ((n - Rational(1)) * k - (n + Rational(1)) * kp),
                   Rational(1, 2) * ((n - Rational(1)) * k + (n + Rational(1)) * kp)};
      rec.mirror = {half - k};
      rec.identity = Rational(1, 2) * ((n + Rational(1)) * k) - half;
      break;
    case Family::B:
      rec.toric = {(n - Rational(3)) * k + kp, Rational(2) * k - kp};
      rec.mirror = {half - k, half - kp};
      rec.identity = (n - Rational(1)) * k + kp - half;
      break;
    case Family::C:
      rec.toric = {(n - Rational(3)) * k + Rational(2) * kp, k - kp};
      rec.mirror = {half - k, half - kp};
      rec.identity = (n - Rational(1)) * k + kp - half;
      break;
    case Family::D:
      rec.toric = {(n - Rational(3)) * k, k};
      rec.mirror = {half - k};
      rec.identity = (n - Rational(1)) * k - half;
      break;
    case Family::E:
      rec.toric = {k, Rational(2) * k, (n - Rational(4)) * k};
      rec.mirror = {half - k};
      rec.identity = Rational(1, 2) * (h * k) - half;
      break;
    case Family::F:
      rec.toric = {kp, Rational(2) * k};
      rec.mirror = {half - k, half - kp};
      rec.identity = Rational(3) * (k + kp) - half;
      break;
    case Family::G:
      rec.toric = {Rational(3, 2) * kp - Rational(1, 2) * k,
                   Rational(1, 2) * k - Rational(1, 2) * kp};
      rec.mirror = {half - k, half - kp};
      rec.identity = Rational(3, 2) * (k + kp) - half;
      break;
  }
  return rec;
}

// True iff r = 1/m for a positive integer m (1/1 included); callers gate on
// positivity separately.
inline bool is_unit_fraction(const Rational& r) { return r.num() == 1; }

// One evaluated exponent with its admissibility verdict.
struct ExponentCheck {
  std::string label;
  Rational value;
  bool constrained = false;  // strictly positive entries are constrained
  bool ok = true;
};

struct SchwarzReport {
  bool ok = true;
  std::vector<ExponentCheck> checks;
};

// Schwarz admissibility: every strictly positive relative exponent must be
// the reciprocal of a positive integer; entries <= 0 impose no condition.
inline SchwarzReport schwarz_satisfied(const RootSystem& rs, const Kappa& kappa) {
  const ExponentRecord rec = relative_exponents(rs);
  SchwarzReport report;
  auto add = [&](const std::string& label, const LinForm& f) {
    ExponentCheck c;
    c.label = label;
    c.value = f.eval(kappa);
    c.constrained = Rational(0) < c.value;
    c.ok = !c.constrained || is_unit_fraction(c.value);
    report.ok = report.ok && c.ok;
    report.checks.push_back(std::move(c));
  };
  for (std::size_t i = 0; i < rec.toric.size(); ++i)
    add("toric[" + std::to_string(i) + "]", rec.toric[i]);
  for (std::size_t i = 0; i < rec.mirror.size(); ++i)
    add("mirror[" + std::to_string(i) + "]", rec.mirror[i]);
  add("identity", rec.identity);
  return report;
}

// A parameter point at which the quotient extends to a ball quotient.
// k = 1/2 - 1/p always; for B/C/F/G also kp = 1/2 - 1/p_prime; for the A
// family kp is a rational solving the unit-fraction conditions; for D/E
// there is no second parameter.
struct BallQuotientEntry {
  Family family = Family::A;
  int rank = 0;
  Rational k;
  long p = 0;
  bool has_kp = false;
  Rational kp;
  long p_prime = 0;  // only meaningful for B/C/F/G

  friend bool operator==(const BallQuotientEntry& a, const BallQuotientEntry& b) {
    return a.family == b.family && a.rank == b.rank && a.k == b.k && a.p == b.p &&
           a.has_kp == b.has_kp && a.kp == b.kp && a.p_prime == b.p_prime;
  }
  friend bool operator!=(const BallQuotientEntry& a, const BallQuotientEntry& b) {
    return !(a == b);
  }
};

// Full admission test used by the enumerator and re-checked by callers.
inline bool ball_quotient_admissible(const RootSystem& rs, const Kappa& kappa) {
  return in_hyperbolic_region(rs, kappa) && schwarz_satisfied(rs, kappa).ok;
}

// Enumerate every admissible parameter for the given type.  `bound_scale`
// multiplies all search bounds; the enumeration must be stable under
// doubling it (completeness guard), since the intrinsic bounds below are
// already not binding.
inline std::vector<BallQuotientEntry> enumerate_ball_quotients(Family family, int rank,
                                                               long bound_scale = 1) {
  const RootSystem rs = RootSystem::build(family, rank);
  const long cap = 100 * bound_scale;
  std::vector<BallQuotientEntry> out;

  auto k_of = [](long p) { return Rational(1, 2) - Rational(1, p); };

  if (family == Family::A) {
    const Rational nr(rank);
    for (long p = 3; p <= cap; ++p) {
      const Rational k = k_of(p);
      // Candidate second parameters: kp >= 0 with the larger toric exponent
      // e+ = (n-1)k/2 + (n+1)kp/2 equal to 1/q.  Any admissible kp > 0 makes
      // e+ strictly positive, hence a unit fraction, so the scan over q is
      // complete; kp < 0 follows by the x <-> y symmetry.
      const Rational ebase = (nr - Rational(1)) * k / Rational(2);
      std::vector<Rational> candidates = {Rational(0)};
      const Rational qlimit = Rational(2) / ((nr - Rational(1)) * k);
      const long qmax = (qlimit.num() / qlimit.den()) * bound_scale;
      for (long q = 1; q <= qmax; ++q) {
        const Rational kp =
            Rational(2) / (nr + Rational(1)) * (Rational(1, q) - ebase);
        if (Rational(0) < kp) candidates.push_back(kp);
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
      for (const Rational& c : candidates)
        for (int sign : {+1, -1}) {
          if (sign < 0 && c.is_zero()) continue;
          const Rational kp = sign < 0 ? -c : c;
          if (!ball_quotient_admissible(rs, Kappa{k, kp})) continue;
          BallQuotientEntry e;
          e.family = family;
          e.rank = rank;
          e.k = k;
          e.p = p;
          e.has_kp = true;
          e.kp = kp;
          out.push_back(e);
        }
    }
  } else if (family == Family::D || family == Family::E) {
    for (long p = 3; p <= cap; ++p) {
      const Rational k = k_of(p);
      if (!ball_quotient_admissible(rs, Kappa{k, Rational(0)})) continue;
      BallQuotientEntry e;
      e.family = family;
      e.rank = rank;
      e.k = k;
      e.p = p;
      out.push_back(e);
    }
  } else {
    for (long p = 3; p <= cap; ++p) {
      const Rational k = k_of(p);
      for (long pp = 3; pp <= cap; ++pp) {
        const Rational kp = k_of(pp);
        // Cheap hyperbolic-window pre-filter before the full check.
        const auto [x, y] = det_xy(rs, Kappa{k, kp});
        if (!(Rational(0) < x && x < Rational(1) && Rational(0) < y &&
              y < Rational(1)))
          continue;
        if (!ball_quotient_admissible(rs, Kappa{k, kp})) continue;
        BallQuotientEntry e;
        e.family = family;
        e.rank = rank;
        e.k = k;
        e.p = p;
        e.has_kp = true;
        e.kp = kp;
        e.p_prime = pp;
        out.push_back(e);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const BallQuotientEntry& a, const BallQuotientEntry& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.kp < b.kp;
  });
  return out;
}

// Report of the type-A hypergeometric weight check: the weight vector
// mu_0..mu_{n+2}, the three exact exponent identities, and the
// half-integrality verdict with the offending index pairs.
struct DeligneMostowReport {
  int rank = 0;
  Rational k;
  std::vector<Rational> mu;
  bool identities_ok = false;
  bool half_integral = true;
  std::vector<std::pair<int, int>> failing_pairs;
};

// Weights mu_i = k (i = 1..n+1), mu_0 = mu_{n+2} = (2 - (n+1)k)/2, which sum
// to 2.  Verifies the three identities tying the toric/mirror/identity
// exponents of the A family at kp = 0 to the pair sums 1 - mu_i - mu_j, and
// evaluates the half-integrality condition: whenever mu_i + mu_j < 1, the
// value 1 - mu_i - mu_j must lie in 1/N (distinct weights) or 2/N (equal
// weights).
inline DeligneMostowReport deligne_mostow_check(int rank, const Rational& k) {
  const int n = rank;
  DeligneMostowReport report;
  report.rank = rank;
  report.k = k;

  const Rational mu_end = (Rational(2) - Rational(n + 1) * k) / Rational(2);
  report.mu.assign(n + 3, k);
  report.mu.front() = mu_end;
  report.mu.back() = mu_end;
  for (const Rational& m : report.mu)
    if (!(Rational(0) < m && m < Rational(1)))
      throw DomainViolationError("deligne_mostow_check: weight " + m.str() +
                                 " outside (0, 1)");

  Rational total;
  for (const Rational& m : report.mu) total += m;
  if (total != Rational(2))
    throw InconsistencyError("deligne_mostow_check: weights do not sum to 2");

  const Rational one(1), two(2);
  const bool id1 = Rational(n - 1) * k / two == one - report.mu[0] - report.mu[1];
  const bool id2 = (one - two * k) / two == (one - report.mu[1] - report.mu[n + 1]) / two;
  const bool id3 =
      (Rational(n + 1) * k - one) / two == (one - report.mu[0] - report.mu[n + 2]) / two;
  report.identities_ok = id1 && id2 && id3;

  for (int i = 0; i < n + 3; ++i)
    for (int j = i + 1; j < n + 3; ++j) {
      const Rational sum = report.mu[i] + report.mu[j];
      if (!(sum < one)) continue;
      const Rational r = one - sum;
      const bool ok = report.mu[i] == report.mu[j]
                          ? (two / r).den() == 1   // r = 2/m
                          : is_unit_fraction(r);   // r = 1/m
      if (!ok) {
        report.half_integral = false;
        report.failing_pairs.emplace_back(i, j);
      }
    }
  return report;
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_SCHWARZ_HPP
