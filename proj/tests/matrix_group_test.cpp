#include <doctest.h>

#include <memory>
#include <random>
#include <set>

#include "lietype/matrix_group.hpp"

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

}  // namespace

TEST_SUITE_BEGIN("groups");

TEST_CASE("build validations") {
  CHECK_THROWS_AS(LieGroupData::build(Family::GL, 1, field(2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieGroupData::build(Family::Sp, 3, field(3, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieGroupData::build(Family::Sp, 0, field(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("GL_3(F_3): orders of U and T") {
  const auto g = LieGroupData::build(Family::GL, 3, field(3, 1));
  CHECK(g.U_order() == 27);
  CHECK(g.torus_order() == 8);
  CHECK(g.roots().type() == DynkinType::A);
  CHECK(g.roots().rank() == 2);
}

TEST_CASE("Sp_4(F_3): C_2 system, |U| = 81") {
  const auto g = LieGroupData::build(Family::Sp, 4, field(3, 1));
  CHECK(g.roots().type() == DynkinType::C);
  CHECK(g.U_order() == 81);
  CHECK(g.torus_order() == 4);
}

TEST_CASE("root subgroup elements in GL_3") {
  const auto g = LieGroupData::build(Family::GL, 3, field(3, 1));
  const RootCoords a1{1, 0};
  CHECK(g.root_subgroup_element(a1, g.field().one()) == elementary(g, 0, 1, 1));
  CHECK(g.root_subgroup_element(a1, g.field().zero()) == g.identity());
  CHECK(g.root_subgroup_element(RootCoords{1, 1}, g.field().one()) ==
        elementary(g, 0, 2, 1));
  CHECK(g.root_subgroup_element(RootCoords{-1, 0}, g.field().one()) ==
        elementary(g, 1, 0, 1));
  CHECK_THROWS_AS(g.root_subgroup_element(RootCoords{2, 0}, g.field().one()),
                  std::invalid_argument);
}

TEST_CASE("Sp_4 long simple root pairs the middle basis vectors") {
  const auto g = LieGroupData::build(Family::Sp, 4, field(3, 1));
  const RootCoords long_simple{0, 1};
  CHECK(g.root_subgroup_element(long_simple, g.field().one()) ==
        elementary(g, 1, 2, 1));
  // every root element preserves the form (checked again explicitly)
  const FqMatrix& J = *g.symplectic_form();
  for (const RootCoords& alpha : g.all_roots())
    for (std::uint32_t c = 0; c < g.field().q(); ++c) {
      const FqMatrix x =
          g.root_subgroup_element(alpha, {static_cast<std::uint16_t>(c)});
      CHECK(x.transpose() * J * x == J);
    }
}

TEST_CASE("one-parameter additivity") {
  for (const auto& g :
       {LieGroupData::build(Family::GL, 3, field(2, 2)),
        LieGroupData::build(Family::Sp, 4, field(3, 1))}) {
    for (const RootCoords& alpha : g.all_roots())
      for (std::uint32_t a = 0; a < g.field().q(); ++a)
        for (std::uint32_t b = 0; b < g.field().q(); ++b) {
          const FqElem ca{static_cast<std::uint16_t>(a)};
          const FqElem cb{static_cast<std::uint16_t>(b)};
          CHECK(g.root_subgroup_element(alpha, ca) *
                    g.root_subgroup_element(alpha, cb) ==
                g.root_subgroup_element(alpha, g.field().add(ca, cb)));
        }
  }
}

TEST_CASE("torus elements") {
  const auto gl2 = LieGroupData::build(Family::GL, 2, field(3, 1));
  const FqMatrix t = gl2.torus_element({gl2.field().one(), gl2.field().from_int(2)});
  CHECK(t.at(0, 0) == gl2.field().one());
  CHECK(t.at(1, 1) == gl2.field().from_int(2));
  CHECK_THROWS_AS(gl2.torus_element({gl2.field().one(), gl2.field().zero()}),
                  std::invalid_argument);

  const auto sp4 = LieGroupData::build(Family::Sp, 4, field(5, 1));
  const FqMatrix s =
      sp4.torus_element({sp4.field().from_int(2), sp4.field().from_int(3)});
  // diag(2, 3, 3^-1, 2^-1) = diag(2, 3, 2, 3) over F_5
  CHECK(s.at(0, 0) == sp4.field().from_int(2));
  CHECK(s.at(1, 1) == sp4.field().from_int(3));
  CHECK(s.at(2, 2) == sp4.field().from_int(2));
  CHECK(s.at(3, 3) == sp4.field().from_int(3));

  const auto sl2 = LieGroupData::build(Family::SL, 2, field(5, 1));
  CHECK_THROWS_AS(
      sl2.torus_element({sl2.field().from_int(2), sl2.field().from_int(2)}),
      std::invalid_argument);
  CHECK(sl2.torus_element({sl2.field().from_int(2), sl2.field().from_int(3)})
            .is_diagonal());
}

TEST_CASE("U_s membership in GL_3") {
  const auto g = LieGroupData::build(Family::GL, 3, field(3, 1));
  CHECK(g.in_U_s(elementary(g, 1, 2, 1), 0));        // I + E_23 misses a_1
  CHECK_FALSE(g.in_U_s(elementary(g, 0, 1, 1), 0));  // I + E_12 hits a_1
  CHECK(g.in_U_s(g.identity(), 0));
  CHECK(g.in_U_s(g.identity(), 1));
  CHECK_THROWS_AS(g.in_U_s(elementary(g, 1, 0, 1), 0), std::invalid_argument);
}

TEST_CASE("element orders") {
  const auto gl2 = LieGroupData::build(Family::GL, 2, field(3, 1));
  CHECK(element_order(elementary(gl2, 0, 1, 1)) == 3);
  CHECK(element_order(gl2.identity()) == 1);

  const auto gl4 = LieGroupData::build(Family::GL, 4, field(3, 1));
  FqMatrix j = gl4.identity();
  for (int i = 0; i < 3; ++i) j.at(i, i + 1) = gl4.field().one();
  CHECK(element_order(j) == 9);

  FqMatrix d = gl2.identity();
  d.at(1, 1) = gl2.field().from_int(2);
  CHECK(element_order(d) == 2);
}

TEST_CASE("unipotence") {
  const auto g = LieGroupData::build(Family::GL, 3, field(2, 1));
  CHECK(is_unipotent(elementary(g, 0, 2, 1)));
  CHECK(is_unipotent(g.identity()));
  const auto gl2 = LieGroupData::build(Family::GL, 2, field(3, 1));
  FqMatrix d = gl2.identity();
  d.at(1, 1) = gl2.field().from_int(2);
  CHECK_FALSE(is_unipotent(d));
  g.for_each_in_U([](const FqMatrix& x) { CHECK(is_unipotent(x)); });
}

TEST_CASE("enumerate_U yields each element exactly once") {
  const auto gl2 = LieGroupData::build(Family::GL, 2, field(2, 2));
  CHECK(gl2.enumerate_U().size() == 4);

  const auto gl3 = LieGroupData::build(Family::GL, 3, field(3, 1));
  const auto u3 = gl3.enumerate_U();
  REQUIRE(u3.size() == 27);
  std::set<std::string> keys;
  for (const FqMatrix& x : u3) {
    keys.insert(x.key());
    CHECK(x.is_upper_unitriangular());
  }
  CHECK(keys.size() == 27);

  const auto sp4 = LieGroupData::build(Family::Sp, 4, field(3, 1));
  const auto u4 = sp4.enumerate_U();
  REQUIRE(u4.size() == 81);
  std::set<std::string> k4;
  for (const FqMatrix& x : u4) {
    k4.insert(x.key());
    CHECK(sp4.in_group(x));
  }
  CHECK(k4.size() == 81);

  CHECK_THROWS_AS(gl3.enumerate_U(10), BudgetExceeded);
}

TEST_CASE("normal form round trip") {
  std::mt19937 rng(1234);
  for (const auto& g :
       {LieGroupData::build(Family::GL, 3, field(5, 1)),
        LieGroupData::build(Family::Sp, 4, field(3, 1)),
        LieGroupData::build(Family::Sp, 6, field(2, 1))}) {
    const auto& pos = g.roots().positive_roots();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<FqElem> coords;
      FqMatrix u = g.identity();
      for (const RootCoords& alpha : pos) {
        const FqElem c{static_cast<std::uint16_t>(rng() % g.field().q())};
        coords.push_back(c);
        u = u * g.root_subgroup_element(alpha, c);
      }
      const auto extracted = g.u_coordinates(u);
      REQUIRE(extracted.has_value());
      CHECK(*extracted == coords);
    }
    // single root elements have delta coordinates
    for (std::size_t k = 0; k < pos.size(); ++k) {
      const auto c = g.u_coordinates(
          g.root_subgroup_element(pos[k], g.field().primitive_element()));
      REQUIRE(c.has_value());
      for (std::size_t i = 0; i < pos.size(); ++i)
        CHECK((*c)[i] == (i == k ? g.field().primitive_element()
                                 : g.field().zero()));
    }
  }
}

TEST_CASE("torus normalizes each root subgroup, F_q-linearly") {
  for (const auto& g :
       {LieGroupData::build(Family::GL, 3, field(2, 2)),
        LieGroupData::build(Family::Sp, 4, field(3, 1))}) {
    for (const FqMatrix& t : g.torus_elements()) {
      const FqMatrix ti = t.inverse();
      for (const RootCoords& alpha : g.all_roots()) {
        const FqElem scale = g.root_character(alpha, t);
        for (std::uint32_t c = 0; c < g.field().q(); ++c) {
          const FqElem ce{static_cast<std::uint16_t>(c)};
          CHECK(t * g.root_subgroup_element(alpha, ce) * ti ==
                g.root_subgroup_element(alpha, g.field().mul(scale, ce)));
        }
      }
    }
  }
}

TEST_CASE("U_s is normal in U") {
  for (const auto& g : {LieGroupData::build(Family::GL, 3, field(2, 1)),
                        LieGroupData::build(Family::GL, 3, field(3, 1))}) {
    const auto U = g.enumerate_U();
    for (int s = 0; s < g.roots().rank(); ++s)
      for (const FqMatrix& u : U)
        for (const FqMatrix& v : U) {
          if (!g.in_U_s(v, s)) continue;
          CHECK(g.in_U_s(u * v * u.inverse(), s));
        }
  }
}

TEST_CASE("the simple coordinate is a homomorphism onto F_q") {
  for (const auto& g : {LieGroupData::build(Family::GL, 3, field(2, 1)),
                        LieGroupData::build(Family::Sp, 4, field(2, 1))}) {
    const auto U = g.enumerate_U();
    for (int s = 0; s < g.roots().rank(); ++s) {
      std::set<std::uint16_t> values;
      for (const FqMatrix& u : U) {
        values.insert(g.simple_coordinate(u, s).code);
        for (const FqMatrix& v : U)
          CHECK(g.simple_coordinate(u * v, s) ==
                g.field().add(g.simple_coordinate(u, s),
                              g.simple_coordinate(v, s)));
      }
      CHECK(values.size() == g.field().q());
    }
  }
}

TEST_CASE("matrix inverse and determinant") {
  const auto g = LieGroupData::build(Family::GL, 3, field(5, 1));
  std::mt19937 rng(99);
  int found = 0;
  while (found < 20) {
    FqMatrix m(&g.field(), 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m.at(i, j) = {static_cast<std::uint16_t>(rng() % 5)};
    if (g.field().is_zero(m.det())) {
      CHECK_THROWS_AS(m.inverse(), std::invalid_argument);
      continue;
    }
    CHECK(m * m.inverse() == g.identity());
    ++found;
  }
}

TEST_SUITE_END();
