// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#include <catch2/catch_amalgamated.hpp>

#include "mirrorlat/connection.hpp"

using mirrorlat::Connection;
using mirrorlat::Cx;
using mirrorlat::Family;
using mirrorlat::Kappa;
using mirrorlat::QMat;
using mirrorlat::QVec;
using mirrorlat::Rational;
using mirrorlat::SplitMix64;
using mirrorlat::TorusPoint;

namespace {
Kappa kap(const char* k, const char* kp) {
  return Kappa{Rational::parse(k), Rational::parse(kp)};
}
}  // namespace

TEST_CASE("invariant form scalar matches hand-computed values", "[connection]") {
  // Each value follows from the per-family closed form by direct arithmetic.
  CHECK(Connection::build(Family::A, 2).a_coeff().eval(kap("2", "0")) == Rational(3));
  CHECK(Connection::build(Family::A, 3).a_coeff().eval(kap("1/6", "1/12")) == Rational(1, 48));
  CHECK(Connection::build(Family::B, 3).a_coeff().eval(kap("1/5", "1/7")) == Rational(12, 175));
  CHECK(Connection::build(Family::C, 3).a_coeff().eval(kap("1/5", "1/7")) == Rational(17, 175));
  CHECK(Connection::build(Family::D, 5).a_coeff().eval(kap("1/3", "0")) == Rational(1, 3));
  CHECK(Connection::build(Family::E, 6).a_coeff().eval(kap("1/4", "0")) == Rational(3, 8));
  CHECK(Connection::build(Family::F, 4).a_coeff().eval(kap("1/6", "1/3")) == Rational(1, 3));
  CHECK(Connection::build(Family::G, 2).a_coeff().eval(kap("1/6", "1/18")) == Rational(1, 18));
  // Normalization constant: the A2 system at weights (2, 0) has c_kappa = 1.
  CHECK(Connection::build(Family::A, 2).c_kappa().eval(kap("2", "0")) == Rational(1));
}

TEST_CASE("root kernel sum reproduces gamma times the coweight Gram matrix",
          "[connection]") {
  for (const auto& [f, n] : mirrorlat::supported_types()) {
    const Connection c = Connection::build(f, n);
    INFO(c.root_system().name());
    const Rational gamma = c.root_system().gamma();
    bool ok = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ok = ok && c.root_kernel_sum(i, j) == gamma * c.coweight_gram()(i, j);
    CHECK(ok);
  }
}

TEST_CASE("auxiliary map eigenvalues on coroots and coweights (type A)", "[connection]") {
  // Independent oracle: at the m-th coweight (1-indexed), the map b_p/kp has
  // eigenvalue (n+1-m)/2 on alpha_i^vee for i < m, -m/2 for i > m, and
  // (n+1-2m)/2 on p itself.
  for (int n : {3, 5, 7}) {
    const Connection c = Connection::build(Family::A, n);
    const Kappa unit{Rational(0), Rational(1)};  // isolate the kp factor
    for (int m = 1; m <= n; ++m) {
      const QMat b = c.b_endo(m - 1, unit);
      INFO("A" << n << ", coweight " << m);
      for (int i = 1; i <= n; ++i) {
        if (i == m) continue;
        const Rational expect = i < m ? Rational(n + 1 - m, 2) : Rational(-m, 2);
        QVec e(n, Rational(0));
        e[i - 1] = Rational(1);
        CHECK(b.apply(e) == expect * e);
      }
      const QVec p = c.coweight_coroot_coords(m - 1);
      CHECK(b.apply(p) == Rational(n + 1 - 2 * m, 2) * p);
    }
  }
}

TEST_CASE("all five integrability conditions hold across types and weights",
          "[connection]") {
  const std::vector<Kappa> samples = {kap("1/6", "1/9"), kap("1/3", "-1/5"), kap("0", "0"),
                                      kap("2/7", "0"), kap("0", "1/3"), kap("-1/2", "3/5")};
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::A, 5}, {Family::B, 2}, {Family::B, 4},
           {Family::C, 3}, {Family::D, 4}, {Family::E, 6}, {Family::F, 4}, {Family::G, 2}}) {
    const Connection c = Connection::build(f, n);
    for (const Kappa& kappa : samples) {
      const auto rep = c.flatness_conditions_check(kappa);
      INFO(c.root_system().name() << " at k=" << kappa.k << ", kp=" << kappa.kp);
      for (const auto& cond : rep.conditions) {
        INFO(cond.name << (cond.witnesses.empty() ? "" : ": " + cond.witnesses.front()));
        CHECK(cond.ok);
      }
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("rescaling the invariant form breaks exactly the curvature identity",
          "[connection]") {
  for (const auto& [f, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4}}) {
    const Connection c = Connection::build(f, n);
    const auto rep = c.flatness_conditions_check(kap("1/5", "1/7"), Rational(101, 100));
    INFO(c.root_system().name());
    CHECK_FALSE(rep.ok);
    for (const auto& cond : rep.conditions) {
      if (cond.name == "projective_curvature_identity")
        CHECK_FALSE(cond.ok);
      else
        CHECK(cond.ok);
    }
  }
}

TEST_CASE("frame curvature vanishes pointwise", "[connection]") {
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 4}, {Family::B, 2}, {Family::C, 3},
           {Family::D, 4}, {Family::F, 4}, {Family::G, 2}}) {
    const Connection c = Connection::build(f, n);
    const auto rep = c.curvature_check(kap("1/6", "1/9"), 3, 20260814u);
    INFO(c.root_system().name());
    CHECK(rep.max_residual < 1e-10);
    CHECK(rep.max_projective_residual < 1e-10);
  }
}

TEST_CASE("perturbing the invariant form yields visible curvature", "[connection]") {
  const Connection c = Connection::build(Family::B, 3);
  const auto rep = c.curvature_check(kap("1/5", "1/7"), 2, 99u, Rational(101, 100));
  CHECK(rep.max_residual > 1e-6);
}

TEST_CASE("product formula log-derivative: closed form, finite difference, trace",
          "[connection]") {
  for (const auto& [f, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::F, 4}, {Family::G, 2}}) {
    const Connection c = Connection::build(f, n);
    SplitMix64 rng(4242u);
    const TorusPoint pt = c.random_regular_point(rng);
    std::vector<Cx> xi(n);
    for (int j = 0; j < n; ++j) xi[j] = Cx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto rep = c.wronskian_check(kap("1/6", "1/9"), pt, xi);
    INFO(c.root_system().name());
    CHECK(rep.rel_err_fd < 1e-6);
    CHECK(rep.rel_err_trace < 1e-9);
  }
}

TEST_CASE("t d/dt is a dilatation field", "[connection]") {
  for (const auto& [f, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::C, 4}, {Family::E, 6}}) {
    const Connection c = Connection::build(f, n);
    INFO(c.root_system().name());
    CHECK(c.dilatation_check(kap("1/6", "1/9"), 7u).max_residual < 1e-12);
  }
}

TEST_CASE("evaluation on a mirror is rejected", "[connection]") {
  const Connection c = Connection::build(Family::A, 2);
  TorusPoint on_mirror;
  on_mirror.y = {Cx(0.0, 0.0), Cx(0.3, 1.1)};  // e^{alpha_1} = 1 exactly
  CHECK_THROWS_AS(c.theta(1, kap("1/6", "0"), on_mirror), mirrorlat::SingularPointError);
  CHECK(c.regularity_margin(on_mirror) == 0.0);
}
