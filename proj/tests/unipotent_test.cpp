#include <doctest.h>

#include <memory>
#include <random>
#include <set>

#include "lietype/unipotent.hpp"

using namespace lietype;

namespace {

std::shared_ptr<const Fq> field(int p, int r) {
  return std::make_shared<const Fq>(p, r);
}

FqMatrix elementary(const LieGroupData& g, int i, int j, int val) {
  FqMatrix m = g.identity();
  m.at(i, j) = g.field().from_int(val);
  return m;
}

FqMatrix full_jordan(const LieGroupData& g) {
  FqMatrix m = g.identity();
  for (int i = 0; i + 1 < g.n(); ++i) m.at(i, i + 1) = g.field().one();
  return m;
}

std::vector<std::uint64_t> closure_orders(
    const LieGroupData& g, const std::vector<std::vector<FqMatrix>>& chain) {
  std::vector<std::uint64_t> orders;
  for (const auto& gens : chain)
    orders.push_back(generated_subgroup(g.identity(), gens).size());
  return orders;
}

}  // namespace

TEST_SUITE_BEGIN("unipotent");

TEST_CASE("flag counts match the subspace-chain product") {
  CHECK(complete_flag_count(2, 3) == 21);
  CHECK(complete_flag_count(3, 2) == 4);
  CHECK(complete_flag_count(3, 3) == 52);
  CHECK(complete_flag_count(5, 4) == 29016);

  CHECK(enumerate_flags(Fq(2, 1), 3).size() == 21);
  CHECK(enumerate_flags(Fq(3, 1), 2).size() == 4);
  CHECK(enumerate_flags(Fq(3, 1), 3).size() == 52);
  CHECK_THROWS_AS(enumerate_flags(Fq(3, 1), 3, 50), BudgetExceeded);
}

TEST_CASE("flags are canonical and distinct") {
  const Fq F(2, 2);
  const auto flags = enumerate_flags(F, 3);
  std::set<std::string> keys;
  for (const Flag& f : flags) keys.insert(f.key());
  CHECK(keys.size() == flags.size());
  CHECK(flags.size() == complete_flag_count(4, 3));
}

TEST_CASE("the standard flag is fixed by all of U") {
  const auto g = LieGroupData::build(Family::GL, 3, field(3, 1));
  const Flag std_flag = standard_flag(g.field(), 3);
  g.for_each_in_U(
      [&](const FqMatrix& x) { CHECK(flag_fixed_by(x, std_flag)); });
}

TEST_CASE("fixed flags in GL_3(F_2)") {
  const auto g = LieGroupData::build(Family::GL, 3, field(2, 1));
  const auto fixed_j = fixed_flags(g, {full_jordan(g)});
  REQUIRE(fixed_j.size() == 1);
  CHECK(fixed_j.front() == standard_flag(g.field(), 3));
  CHECK(fixed_flags(g, {g.identity()}).size() == 21);
  CHECK(fixed_flags(g, {elementary(g, 0, 1, 1)}).size() == 5);
}

TEST_CASE("flags reject Sp") {
  const auto g = LieGroupData::build(Family::Sp, 4, field(3, 1));
  CHECK_THROWS_AS(fixed_flags(g, {g.identity()}), std::invalid_argument);
}

TEST_CASE("regular unipotent criterion") {
  const auto g = LieGroupData::build(Family::GL, 3, field(3, 1));
  CHECK(is_regular_unipotent(g, full_jordan(g)));
  CHECK_FALSE(is_regular_unipotent(g, g.identity()));
  const auto g2 = LieGroupData::build(Family::GL, 3, field(2, 1));
  CHECK_FALSE(is_regular_unipotent(g2, elementary(g2, 1, 2, 1)));
  // stated for x in U only
  FqMatrix d = g.identity();
  d.at(1, 1) = g.field().from_int(2);
  CHECK_THROWS_AS(is_regular_unipotent(g, d), std::invalid_argument);
}

TEST_CASE("regularity criteria agree on all of U (small exhaustive)") {
  for (const auto& g : {LieGroupData::build(Family::GL, 2, field(5, 1)),
                        LieGroupData::build(Family::GL, 3, field(3, 1))}) {
    const auto flags = enumerate_flags(g.field(), g.n());
    g.for_each_in_U([&](const FqMatrix& x) {
      std::uint64_t fixed = 0;
      for (const Flag& f : flags)
        if (flag_fixed_by(x, f)) ++fixed;
      CHECK(is_regular_unipotent(g, x) == (fixed == 1));
    });
  }
}

TEST_CASE("conjugation preserves regularity (sampled over G)") {
  const auto g = LieGroupData::build(Family::GL, 3, field(3, 1));
  const auto flags = enumerate_flags(g.field(), 3);
  const FqMatrix x = full_jordan(g);
  std::mt19937 rng(4321);
  int sampled = 0;
  while (sampled < 25) {
    FqMatrix m(&g.field(), 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m.at(i, j) = {static_cast<std::uint16_t>(rng() % 3)};
    if (g.field().is_zero(m.det())) continue;
    ++sampled;
    const FqMatrix conj = m * x * m.inverse();
    std::uint64_t fixed = 0;
    for (const Flag& f : flags)
      if (flag_fixed_by(conj, f)) ++fixed;
    CHECK(fixed == 1);
  }
}

TEST_CASE("regular subgroup in GL_3(F_3)") {
  const auto g = LieGroupData::build(Family::GL, 3, field(3, 1));
  const RegularSubgroup A = build_regular_subgroup(g);
  REQUIRE(A.elements.size() == 3);
  const FqMatrix j = full_jordan(g);
  // {I, I+J, (I+J)^2 = I+2J+J^2}
  CHECK(A.elements[0] == g.identity());
  CHECK(A.elements[1] == j);
  CHECK(A.elements[2] == j * j);
  for (const FqMatrix& x : A.elements)
    if (!x.is_identity()) CHECK(is_regular_unipotent(g, x));
}

TEST_CASE("regular subgroup in GL_2(F_4) has rank 2") {
  const auto g = LieGroupData::build(Family::GL, 2, field(2, 2));
  const RegularSubgroup A = build_regular_subgroup(g);
  CHECK(A.elements.size() == 4);
  for (const FqMatrix& x : A.elements)
    if (!x.is_identity()) CHECK(element_order(x) == 2);
}

TEST_CASE("regular subgroup preconditions") {
  CHECK_THROWS_AS(
      build_regular_subgroup(LieGroupData::build(Family::GL, 4, field(3, 1))),
      std::invalid_argument);  // n > p
  CHECK_THROWS_AS(
      build_regular_subgroup(LieGroupData::build(Family::Sp, 4, field(3, 1))),
      std::invalid_argument);  // h = 4 > 3
  CHECK_THROWS_AS(
      build_regular_subgroup(LieGroupData::build(Family::Sp, 4, field(5, 2))),
      std::invalid_argument);  // Sp needs r = 1
}

TEST_CASE("regular subgroup in Sp_4(F_5)") {
  const auto g = LieGroupData::build(Family::Sp, 4, field(5, 1));
  const RegularSubgroup A = build_regular_subgroup(g);
  CHECK(A.elements.size() == 5);
  for (const FqMatrix& x : A.elements) CHECK(g.in_group(x));
}

TEST_CASE("composite isomorphism check") {
  const auto g3 = LieGroupData::build(Family::GL, 3, field(3, 1));
  const RegularSubgroup A3 = build_regular_subgroup(g3);
  CHECK(composite_iso_check(g3, A3, 0));
  CHECK(composite_iso_check(g3, A3, 1));

  const auto g4 = LieGroupData::build(Family::GL, 2, field(2, 2));
  const RegularSubgroup A4 = build_regular_subgroup(g4);
  CHECK(composite_iso_check(g4, A4, 0));

  // central elements all map to 0
  RegularSubgroup central;
  central.elements = {g3.identity(), elementary(g3, 0, 2, 1),
                      elementary(g3, 0, 2, 2)};
  CHECK_FALSE(composite_iso_check(g3, central, 0));
}

TEST_CASE("orbit decomposition") {
  const auto g3 = LieGroupData::build(Family::GL, 3, field(3, 1));
  const auto orbits3 =
      orbit_decomposition(g3, build_regular_subgroup(g3).elements);
  REQUIRE(orbits3.size() == 2);
  CHECK(orbits3.at(1) == 1);
  CHECK(orbits3.at(3) == 17);

  const auto g2 = LieGroupData::build(Family::GL, 2, field(3, 1));
  const auto orbits2 =
      orbit_decomposition(g2, build_regular_subgroup(g2).elements);
  CHECK(orbits2.at(1) == 1);
  CHECK(orbits2.at(3) == 1);

  const auto trivial = orbit_decomposition(g2, {g2.identity()});
  CHECK(trivial.at(1) == 4);
}

TEST_CASE("height filtration orders") {
  const auto g3 = LieGroupData::build(Family::GL, 3, field(2, 1));
  CHECK(closure_orders(g3, height_filtration(g3)) ==
        std::vector<std::uint64_t>{8, 2, 1});

  const auto g2 = LieGroupData::build(Family::GL, 2, field(5, 1));
  CHECK(closure_orders(g2, height_filtration(g2)) ==
        std::vector<std::uint64_t>{5, 1});

  const auto sp = LieGroupData::build(Family::Sp, 4, field(3, 1));
  CHECK(closure_orders(sp, height_filtration(sp)) ==
        std::vector<std::uint64_t>{81, 9, 3, 1});
}

TEST_CASE("filtration levels are the coordinate-vanishing sets") {
  const auto g = LieGroupData::build(Family::Sp, 4, field(3, 1));
  const auto chain = height_filtration(g);
  const auto& pos = g.roots().positive_roots();
  for (std::size_t k = 1; k < chain.size(); ++k) {
    for (const FqMatrix& x :
         generated_subgroup(g.identity(), chain[k])) {
      const auto coords = g.u_coordinates(x);
      REQUIRE(coords.has_value());
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (g.roots().height(pos[i]) <= static_cast<int>(k))
          CHECK(g.field().is_zero((*coords)[i]));
    }
  }
}

TEST_CASE("central series") {
  const auto g3 = LieGroupData::build(Family::GL, 3, field(3, 1));
  CHECK(is_central_series(g3, height_filtration(g3)));

  const auto g4 = LieGroupData::build(Family::GL, 4, field(3, 1));
  CHECK(is_central_series(g4, height_filtration(g4)));

  // artificial chain U >= 1 fails: [U, U] is nontrivial for GL_3
  std::vector<std::vector<FqMatrix>> artificial{g3.U_generators(), {}};
  CHECK_FALSE(is_central_series(g3, artificial));
}

TEST_CASE("exponent of U") {
  CHECK(exponent_of_U(LieGroupData::build(Family::GL, 3, field(3, 1))) == 3);
  CHECK(exponent_of_U(LieGroupData::build(Family::GL, 4, field(3, 1))) == 9);
  CHECK(exponent_of_U(LieGroupData::build(Family::GL, 2, field(2, 2))) == 2);
  CHECK(exponent_of_U(LieGroupData::build(Family::GL, 3, field(2, 1))) == 4);
}

TEST_CASE("lower central series") {
  const auto g3 = LieGroupData::build(Family::GL, 3, field(3, 1));
  CHECK(lower_central_series_orders(g3) ==
        std::vector<std::uint64_t>{27, 3, 1});

  const auto g4 = LieGroupData::build(Family::GL, 4, field(2, 1));
  CHECK(lower_central_series_orders(g4) ==
        std::vector<std::uint64_t>{64, 8, 2, 1});
}

TEST_CASE("Chevalley commutator containment") {
  CHECK(chevalley_commutator_check(
      LieGroupData::build(Family::GL, 3, field(3, 1))));
  CHECK(chevalley_commutator_check(
      LieGroupData::build(Family::Sp, 4, field(3, 1))));
  CHECK(chevalley_commutator_check(
      LieGroupData::build(Family::Sp, 6, field(2, 1))));
}

TEST_SUITE_END();
