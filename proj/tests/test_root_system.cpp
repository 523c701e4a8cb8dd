// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "mirrorlat/root_system.hpp"

using mirrorlat::Family;
using mirrorlat::QMat;
using mirrorlat::QVec;
using mirrorlat::Rational;
using mirrorlat::RootSystem;

namespace {

// Textbook positive-root counts, independent of the closure algorithm.
long expected_positive_count(Family f, int n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

long expected_coxeter_number(Family f, int n) {
  switch (f) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("all supported types build with textbook root counts", "[root-system]") {
  for (const auto& [f, n] : mirrorlat::supported_types()) {
    const RootSystem rs = RootSystem::build(f, n);
    INFO(rs.name());
    CHECK(static_cast<long>(rs.num_positive()) == expected_positive_count(f, n));
    CHECK(rs.coxeter_number() == expected_coxeter_number(f, n));
  }
}

TEST_CASE("unsupported types are rejected with the catalogue", "[root-system]") {
  CHECK_THROWS_AS(RootSystem::build(Family::A, 1), mirrorlat::UnsupportedTypeError);
  CHECK_THROWS_AS(RootSystem::build(Family::A, 10), mirrorlat::UnsupportedTypeError);
  CHECK_THROWS_AS(RootSystem::build(Family::B, 8), mirrorlat::UnsupportedTypeError);
  CHECK_THROWS_AS(RootSystem::build(Family::D, 3), mirrorlat::UnsupportedTypeError);
  CHECK_THROWS_AS(RootSystem::build(Family::E, 9), mirrorlat::UnsupportedTypeError);
  CHECK_THROWS_AS(RootSystem::build(Family::G, 3), mirrorlat::UnsupportedTypeError);
  CHECK_THROWS_AS(mirrorlat::family_from_char('H'), mirrorlat::UnsupportedTypeError);
  try {
    RootSystem::build(Family::E, 9);
    FAIL("expected UnsupportedTypeError");
  } catch (const mirrorlat::UnsupportedTypeError& e) {
    CHECK(std::string(e.what()).find("G2") != std::string::npos);
  }
}

TEST_CASE("crystallographic pairings are integral", "[root-system]") {
  for (const auto& [f, n] : mirrorlat::supported_types()) {
    const RootSystem rs = RootSystem::build(f, n);
    INFO(rs.name());
    bool ok = true;
    for (const QVec& beta : rs.positive)
      for (const QVec& cav : rs.positive_coroot) ok = ok && dot(beta, cav).is_integer();
    CHECK(ok);
  }
}

TEST_CASE("Cartan matrices match hand-entered references", "[root-system]") {
  auto check_cartan = [](Family f, int n, const std::vector<std::vector<int>>& ref) {
    const RootSystem rs = RootSystem::build(f, n);
    INFO(rs.name());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        INFO("entry (" << i << "," << j << ")");
        CHECK(rs.cartan(i, j) == Rational(ref[i][j]));
      }
  };
  check_cartan(Family::A, 3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  // Convention: entry (i, j) is the pairing of alpha_i with the coroot of
  // alpha_j, so the -2 sits in the row of the long root neighbouring the
  // short one (B3) and in the row of the short neighbour of the long root
  // (C3).
  check_cartan(Family::B, 3, {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  check_cartan(Family::C, 3, {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  check_cartan(Family::D, 4, {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  check_cartan(Family::F, 4, {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  check_cartan(Family::G, 2, {{2, -1}, {-3, 2}});
  check_cartan(Family::E, 6,
               {{2, 0, -1, 0, 0, 0},
                {0, 2, 0, -1, 0, 0},
                {-1, 0, 2, -1, 0, 0},
                {0, -1, -1, 2, -1, 0},
                {0, 0, 0, -1, 2, -1},
                {0, 0, 0, 0, -1, 2}});
}

TEST_CASE("fundamental coweights are dual to the simple roots", "[root-system]") {
  for (const auto& [f, n] : mirrorlat::supported_types()) {
    const RootSystem rs = RootSystem::build(f, n);
    INFO(rs.name());
    bool ok = true;
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < n; ++m)
        ok = ok && dot(rs.simple[i], rs.coweight[m]) == Rational(i == m ? 1 : 0);
    CHECK(ok);
  }
}

TEST_CASE("A3 second coweight has the classical coordinates", "[root-system]") {
  const RootSystem rs = RootSystem::build(Family::A, 3);
  const QVec expected{Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)};
  CHECK(rs.coweight[1] == expected);
}

TEST_CASE("orbit tags split by length with known sizes", "[root-system]") {
  auto sizes = [](Family f, int n) { return RootSystem::build(f, n).orbit_sizes(); };
  CHECK(sizes(Family::A, 4) == std::make_pair(10, 0));
  CHECK(sizes(Family::D, 5) == std::make_pair(20, 0));
  CHECK(sizes(Family::E, 6) == std::make_pair(36, 0));
  // B_n: alpha_1 long, n(n-1) long positives and n short ones.
  CHECK(sizes(Family::B, 3) == std::make_pair(6, 3));
  // C_n: alpha_1 short, n(n-1) short positives and n long ones.
  CHECK(sizes(Family::C, 3) == std::make_pair(6, 3));
  CHECK(sizes(Family::F, 4) == std::make_pair(12, 12));
  CHECK(sizes(Family::G, 2) == std::make_pair(3, 3));
}

TEST_CASE("highest roots and their orbit tags", "[root-system]") {
  auto highest = [](Family f, int n) {
    const RootSystem rs = RootSystem::build(f, n);
    return std::make_pair(rs.highest_root, rs.orbit_tag[rs.highest_root_index]);
  };
  {
    const auto [hr, tag] = highest(Family::A, 3);
    CHECK(hr == QVec{Rational(1), Rational(0), Rational(0), Rational(-1)});
    CHECK(tag == 0);
  }
  {
    const auto [hr, tag] = highest(Family::B, 3);
    CHECK(hr == QVec{Rational(1), Rational(1), Rational(0)});
    CHECK(tag == 0);  // long, same orbit as alpha_1
  }
  {
    const auto [hr, tag] = highest(Family::C, 3);
    CHECK(hr == QVec{Rational(2), Rational(0), Rational(0)});
    CHECK(tag == 1);  // long, opposite orbit to the short alpha_1
  }
  {
    const auto [hr, tag] = highest(Family::F, 4);
    CHECK(hr == QVec{Rational(1), Rational(1), Rational(0), Rational(0)});
    CHECK(tag == 0);
  }
  {
    const auto [hr, tag] = highest(Family::G, 2);
    CHECK(hr == QVec{Rational(-1), Rational(-1), Rational(2)});
    CHECK(tag == 1);  // long orbit
  }
}

TEST_CASE("affine Coxeter matrices match hand-derived diagrams", "[root-system]") {
  auto mat = [](Family f, int n) { return RootSystem::build(f, n).affine_coxeter_matrix(); };

  {  // Extended A2: a 3-cycle of simple bonds.
    const auto m = mat(Family::A, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m(i, j) == (i == j ? 1 : 3));
  }
  {  // Extended A3: a 4-cycle; antipodal nodes commute.
    const auto m = mat(Family::A, 3);
    CHECK(m(0, 1) == 3);
    CHECK(m(0, 3) == 3);
    CHECK(m(0, 2) == 2);
    CHECK(m(1, 2) == 3);
    CHECK(m(1, 3) == 2);
    CHECK(m(2, 3) == 3);
  }
  {  // Extended B2: path 0 -(4)- 2 -(4)- 1 (node 0 attaches to the short root).
    const auto m = mat(Family::B, 2);
    CHECK(m(0, 2) == 4);
    CHECK(m(1, 2) == 4);
    CHECK(m(0, 1) == 2);
  }
  {  // Extended C3: path 0 -(4)- 1 - 2 -(4)- 3.
    const auto m = mat(Family::C, 3);
    CHECK(m(0, 1) == 4);
    CHECK(m(1, 2) == 3);
    CHECK(m(2, 3) == 4);
    CHECK(m(0, 2) == 2);
    CHECK(m(0, 3) == 2);
    CHECK(m(1, 3) == 2);
  }
  {  // Extended G2: path 0 -(3)- 2 -(6)- 1 (node 0 attaches to the long root).
    const auto m = mat(Family::G, 2);
    CHECK(m(0, 2) == 3);
    CHECK(m(1, 2) == 6);
    CHECK(m(0, 1) == 2);
  }
  {  // Extended F4: path 0 - 1 - 2 -(4)- 3 - 4.
    const auto m = mat(Family::F, 4);
    CHECK(m(0, 1) == 3);
    CHECK(m(1, 2) == 3);
    CHECK(m(2, 3) == 4);
    CHECK(m(3, 4) == 3);
    CHECK(m(0, 2) == 2);
    CHECK(m(0, 3) == 2);
    CHECK(m(0, 4) == 2);
  }
  {  // Extended D4: star with three simple bonds plus the extended node on node 2.
    const auto m = mat(Family::D, 4);
    CHECK(m(0, 2) == 3);
    CHECK(m(1, 2) == 3);
    CHECK(m(3, 2) == 3);
    CHECK(m(4, 2) == 3);
    CHECK(m(0, 1) == 2);
    CHECK(m(3, 4) == 2);
  }
}

TEST_CASE("rank-2 subsystem census", "[root-system]") {
  {  // A3: four triangles (one per index triple) and three orthogonal pairs.
    const RootSystem rs = RootSystem::build(Family::A, 3);
    const auto subs = rs.rank2_subsystems();
    std::map<std::size_t, int> by_size;
    for (const auto& s : subs) by_size[s.size()]++;
    CHECK(subs.size() == 7);
    CHECK(by_size[3] == 4);
    CHECK(by_size[2] == 3);
  }
  {  // G2 is itself the only rank-2 subsystem.
    const RootSystem rs = RootSystem::build(Family::G, 2);
    const auto subs = rs.rank2_subsystems();
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].size() == 6);
  }
  {  // B3: sizes can only be 2 (A1xA1), 3 (A2), or 4 (B2).
    const RootSystem rs = RootSystem::build(Family::B, 3);
    for (const auto& s : rs.rank2_subsystems()) {
      CHECK(s.size() >= 2);
      CHECK(s.size() <= 4);
    }
  }
}

TEST_CASE("gamma matches hand-computed trace constants", "[root-system]") {
  CHECK(RootSystem::build(Family::A, 2).gamma() == Rational(3));
  CHECK(RootSystem::build(Family::A, 4).gamma() == Rational(5));
  CHECK(RootSystem::build(Family::B, 3).gamma() == Rational(5));
  CHECK(RootSystem::build(Family::C, 3).gamma() == Rational(8));
  CHECK(RootSystem::build(Family::D, 5).gamma() == Rational(8));
  // F4 positive roots: 12 long of square length 2, 4 + 8 short of square
  // length 1, so gamma = (24 + 12)/4 = 9.
  CHECK(RootSystem::build(Family::F, 4).gamma() == Rational(9));
  CHECK(RootSystem::build(Family::G, 2).gamma() == Rational(12));
  CHECK(RootSystem::build(Family::E, 7).gamma() == Rational(18));
}

TEST_CASE("coroot coordinate round-trip", "[root-system]") {
  for (const auto& [f, n] : mirrorlat::supported_types()) {
    const RootSystem rs = RootSystem::build(f, n);
    INFO(rs.name());
    bool ok = true;
    for (int m = 0; m < n; ++m) {
      const QVec c = rs.coroot_coords(rs.coweight[m]);
      ok = ok && rs.from_coroot_coords(c) == rs.coweight[m];
    }
    CHECK(ok);
  }
}
