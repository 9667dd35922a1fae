#include <doctest.h>

#include "lietype/root_system.hpp"

using namespace lietype;

namespace {

// (type, rank) -> (|Phi+|, h), classical counts
struct Known {
  DynkinType t;
  int rank, positives, coxeter;
};

const std::vector<Known> kKnown = {
    {DynkinType::A, 1, 1, 2},   {DynkinType::A, 2, 3, 3},
    {DynkinType::A, 3, 6, 4},   {DynkinType::A, 7, 28, 8},
    {DynkinType::B, 2, 4, 4},   {DynkinType::B, 3, 9, 6},
    {DynkinType::B, 8, 64, 16}, {DynkinType::C, 2, 4, 4},
    {DynkinType::C, 3, 9, 6},   {DynkinType::C, 8, 64, 16},
    {DynkinType::D, 4, 12, 6},  {DynkinType::D, 8, 56, 14},
    {DynkinType::E, 6, 36, 12}, {DynkinType::E, 7, 63, 18},
    {DynkinType::E, 8, 120, 30}, {DynkinType::F, 4, 24, 12},
    {DynkinType::G, 2, 6, 6}};

}  // namespace

TEST_SUITE_BEGIN("rootdata");

TEST_CASE("positive root counts and Coxeter numbers") {
  for (const Known& k : kKnown) {
    const RootSystem rs(k.t, k.rank);
    CHECK(static_cast<int>(rs.positive_roots().size()) == k.positives);
    CHECK(rs.coxeter_number() == k.coxeter);
    // internal consistency of closure and h
    CHECK(2 * static_cast<int>(rs.positive_roots().size()) ==
          k.rank * rs.coxeter_number());
  }
}

TEST_CASE("invalid Dynkin data") {
  CHECK_THROWS_AS(RootSystem(DynkinType::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(DynkinType::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(DynkinType::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(DynkinType::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(DynkinType::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(DynkinType::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(DynkinType::G, 3), std::invalid_argument);
}

TEST_CASE("A_2 roots") {
  const RootSystem rs(DynkinType::A, 2);
  REQUIRE(rs.positive_roots().size() == 3);
  CHECK(rs.positive_roots()[0] == RootCoords{0, 1});
  CHECK(rs.positive_roots()[1] == RootCoords{1, 0});
  CHECK(rs.positive_roots()[2] == RootCoords{1, 1});
  CHECK(rs.height(RootCoords{1, 1}) == 2);
}

TEST_CASE("C_2 has a height-3 root") {
  const RootSystem rs(DynkinType::C, 2);
  REQUIRE(rs.positive_roots().size() == 4);
  CHECK(rs.is_positive_root(RootCoords{2, 1}));
  CHECK(rs.height(RootCoords{2, 1}) == 3);
  CHECK(rs.coxeter_number() == 4);
}

TEST_CASE("G_2 reflection closure") {
  const RootSystem rs(DynkinType::G, 2);
  REQUIRE(rs.positive_roots().size() == 6);
  CHECK(rs.is_positive_root(RootCoords{3, 2}));
  CHECK(rs.height(RootCoords{3, 2}) == 5);
  CHECK(rs.coxeter_number() == 6);
}

TEST_CASE("height errors on non-positive vectors") {
  const RootSystem rs(DynkinType::A, 2);
  CHECK_THROWS_AS(rs.height(RootCoords{2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(rs.height(RootCoords{-1, 0}), std::invalid_argument);
}

TEST_CASE("good primes") {
  for (int n : {1, 2, 5, 8})
    for (int p : {2, 3, 5, 7})
      CHECK(RootSystem(DynkinType::A, n).is_good_prime(p));
  CHECK_FALSE(RootSystem(DynkinType::C, 3).is_good_prime(2));
  CHECK(RootSystem(DynkinType::C, 3).is_good_prime(3));
  CHECK(RootSystem(DynkinType::G, 2).is_good_prime(5));
  CHECK_FALSE(RootSystem(DynkinType::G, 2).is_good_prime(2));
  CHECK_FALSE(RootSystem(DynkinType::G, 2).is_good_prime(3));
  CHECK_FALSE(RootSystem(DynkinType::E, 8).is_good_prime(5));
  CHECK(RootSystem(DynkinType::E, 8).is_good_prime(7));
}

TEST_CASE("weight coordinates") {
  const RootSystem a2(DynkinType::A, 2);
  CHECK(a2.weight_coords(a2.simple_root(0)) == std::vector<int>{2, -1});

  const RootSystem a1(DynkinType::A, 1);
  CHECK(a1.weight_coords(a1.simple_root(0)) == std::vector<int>{2});

  const RootSystem c2(DynkinType::C, 2);
  const auto w = c2.weight_coords(c2.simple_root(1));  // long simple root
  for (int x : w) CHECK(x % 2 == 0);
}

TEST_CASE("divisibility in lattices") {
  const RootSystem c3(DynkinType::C, 3);
  for (const RootCoords& alpha : c3.positive_roots())
    CHECK(c3.divisibility_in_lattice(alpha, LatticeKind::RootLattice) == 1);
  CHECK(c3.divisibility_in_lattice(c3.simple_root(2),
                                   LatticeKind::WeightLattice) == 2);

  const RootSystem a3(DynkinType::A, 3);
  for (const RootCoords& alpha : a3.positive_roots())
    CHECK(a3.divisibility_in_lattice(alpha, LatticeKind::WeightLattice) == 1);
}

TEST_CASE("B/C convention: the divisible column belongs to C") {
  const RootSystem c3(DynkinType::C, 3);
  const auto col = c3.weight_coords(c3.simple_root(2));
  CHECK(col == std::vector<int>{0, -2, 2});

  const RootSystem b3(DynkinType::B, 3);
  for (int s = 0; s < 3; ++s)
    CHECK(b3.divisibility_in_lattice(b3.simple_root(s),
                                     LatticeKind::WeightLattice) == 1);
}

TEST_CASE("long roots") {
  const RootSystem c2(DynkinType::C, 2);
  CHECK(c2.is_long_root(RootCoords{0, 1}));
  CHECK(c2.is_long_root(RootCoords{2, 1}));
  CHECK_FALSE(c2.is_long_root(RootCoords{1, 0}));
  CHECK_FALSE(c2.is_long_root(RootCoords{1, 1}));

  const RootSystem g2(DynkinType::G, 2);
  CHECK(g2.is_long_root(RootCoords{3, 2}));
  CHECK_FALSE(g2.is_long_root(RootCoords{1, 0}));

  // simply-laced: single length class
  const RootSystem d4(DynkinType::D, 4);
  for (const RootCoords& alpha : d4.positive_roots())
    CHECK(d4.is_long_root(alpha));
}

TEST_CASE("heights bounded by h-1, all types rank <= 8") {
  for (const Known& k : kKnown) {
    const RootSystem rs(k.t, k.rank);
    for (const RootCoords& alpha : rs.positive_roots()) {
      CHECK(rs.height(alpha) >= 1);
      CHECK(rs.height(alpha) <= rs.coxeter_number() - 1);
    }
  }
}

TEST_CASE("reflections permute the other positive roots") {
  const RootSystem rs(DynkinType::F, 4);
  for (int s = 0; s < 4; ++s) {
    for (const RootCoords& alpha : rs.positive_roots()) {
      const RootCoords image = rs.reflect(s, alpha);
      if (alpha == rs.simple_root(s)) {
        RootCoords neg(image);
        for (int& x : neg) x = -x;
        CHECK(neg == alpha);
      } else {
        CHECK(rs.is_positive_root(image));
      }
    }
  }
}

TEST_SUITE_END();
