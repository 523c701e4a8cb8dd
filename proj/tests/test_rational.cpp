// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#include <catch2/catch_amalgamated.hpp>

#include "mirrorlat/qlinalg.hpp"
#include "mirrorlat/rational.hpp"
#include "mirrorlat/scalar_poly.hpp"

using mirrorlat::Kappa;
using mirrorlat::LinForm;
using mirrorlat::QMat;
using mirrorlat::Rational;
using mirrorlat::ScalarPoly;

TEST_CASE("rational arithmetic is exact and normalized", "[rational]") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(-2, 4).den() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(-1, 1000000007) < Rational(0));
  CHECK(Rational(5, 15).abs() == Rational(1, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing and printing round-trip", "[rational]") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("1/6") == Rational(1, 6));
  CHECK(Rational::parse("-7/90") == Rational(-7, 90));
  CHECK(Rational(-7, 90).str() == "-7/90");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
}

TEST_CASE("unit fraction predicate", "[rational]") {
  CHECK(Rational(1, 1).is_unit_fraction());
  CHECK(Rational(1, 7).is_unit_fraction());
  CHECK_FALSE(Rational(2, 7).is_unit_fraction());
  CHECK_FALSE(Rational(-1, 7).is_unit_fraction());
  CHECK_FALSE(Rational(0).is_unit_fraction());
}

TEST_CASE("overflow is detected, not wrapped", "[rational]") {
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  // Reduction can rescue large intermediates.
  CHECK(Rational(INT64_MAX / 3, INT64_MAX / 3 * 2) == Rational(1, 2));
}

TEST_CASE("scalar polynomials multiply and evaluate exactly", "[rational]") {
  const ScalarPoly k = ScalarPoly::var_k();
  const ScalarPoly kp = ScalarPoly::var_kp();
  const ScalarPoly p = (k - kp) * (k + kp);  // k^2 - kp^2
  CHECK(p.coeff(2, 0) == Rational(1));
  CHECK(p.coeff(0, 2) == Rational(-1));
  CHECK(p.coeff(1, 1) == Rational(0));
  const Kappa kappa{Rational(1, 3), Rational(1, 5)};
  CHECK(p.eval(kappa) == Rational(1, 9) - Rational(1, 25));
  // Degree grows as needed; cubic identities stay exact.
  const ScalarPoly cubic = p * k;
  CHECK(cubic.coeff(3, 0) == Rational(1));
  CHECK(cubic.coeff(1, 2) == Rational(-1));
  CHECK((cubic - cubic).is_zero());
}

TEST_CASE("linear forms behave as exact affine functions", "[rational]") {
  const LinForm f{Rational(1, 2), Rational(-3), Rational(0)};  // 1/2 - 3k
  CHECK(f.eval(Kappa{Rational(1, 6), Rational(0)}) == Rational(0));
  CHECK(f.str() == "1/2 - 3*k");
  const LinForm g{Rational(0), Rational(1), Rational(1)};
  CHECK((f + g).eval(Kappa{Rational(1, 6), Rational(1, 7)}) ==
        f.eval(Kappa{Rational(1, 6), Rational(1, 7)}) + Rational(1, 6) + Rational(1, 7));
  CHECK(LinForm{Rational(0), Rational(0), Rational(0)}.str() == "0");
  CHECK(LinForm{Rational(0), Rational(-1), Rational(0)}.str() == "-k");
}

TEST_CASE("exact linear algebra: rank, nullity, inverse", "[rational]") {
  QMat m(3, 3);
  const int vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};  // A3 Cartan
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Rational(vals[i][j]);
  CHECK(mirrorlat::rank(m) == 3);
  CHECK(mirrorlat::nullity(m) == 0);
  const QMat inv = mirrorlat::inverse(m);
  CHECK(inv * m == QMat::identity(3));
  CHECK(inv(0, 0) == Rational(3, 4));
  CHECK(inv(0, 2) == Rational(1, 4));

  QMat sing(2, 2);
  sing(0, 0) = Rational(1);
  sing(0, 1) = Rational(2);
  sing(1, 0) = Rational(2);
  sing(1, 1) = Rational(4);
  CHECK(mirrorlat::rank(sing) == 1);
  CHECK(mirrorlat::nullity(sing) == 1);
  CHECK_THROWS_AS(mirrorlat::inverse(sing), std::domain_error);
}
