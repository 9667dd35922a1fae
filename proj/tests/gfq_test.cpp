#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lietype/gfq.hpp"

using namespace lietype;

TEST_SUITE_BEGIN("gfq");

TEST_CASE("F_4 arithmetic over x^2+x+1") {
  const Fq F(2, 2, std::vector<int>{1, 1, 1});
  CHECK(F.q() == 4);
  const FqElem w = F.from_coeffs({0, 1});  // the modulus root
  CHECK(F.mul(w, w) == F.from_coeffs({1, 1}));  // w^2 = w + 1
  CHECK(F.add(w, w) == F.zero());
  CHECK(F.inv(w) == F.from_coeffs({1, 1}));  // w * (w+1) = w^2 + w = 1
}

TEST_CASE("prime field F_3") {
  const Fq F(3, 1);
  CHECK(F.q() == 3);
  CHECK(F.add(F.from_int(2), F.from_int(2)) == F.from_int(1));
  CHECK(F.mul(F.from_int(2), F.from_int(2)) == F.from_int(1));
  CHECK(F.inv(F.from_int(2)) == F.from_int(2));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Fq(4, 1), std::invalid_argument);  // composite p
  CHECK_THROWS_AS(Fq(2, 2, std::vector<int>{1, 0, 1}),
                  std::invalid_argument);  // x^2+1 = (x+1)^2 over F_2
  CHECK_THROWS_AS(Fq(2, 17), std::invalid_argument);  // q > 2^16
  CHECK_THROWS_AS(Fq(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Fq(2, 2, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST_CASE("default moduli are the lexicographically least irreducibles") {
  CHECK(Fq(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Fq(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(Fq(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
  CHECK(Fq(5, 1).modulus() == std::vector<int>{0, 1});  // x itself
}

TEST_CASE("frobenius") {
  const Fq F4(2, 2);
  const FqElem w = F4.from_coeffs({0, 1});
  CHECK(F4.frobenius(w) == F4.from_coeffs({1, 1}));
  CHECK(F4.frobenius(F4.zero()) == F4.zero());

  const Fq F7(7, 1);
  for (std::uint32_t c = 0; c < 7; ++c)
    CHECK(F7.frobenius({static_cast<std::uint16_t>(c)}).code == c);

  // iterated r times: identity on F_16 and F_27
  for (const Fq& F : {Fq(2, 4), Fq(3, 3)}) {
    for (std::uint32_t c = 0; c < F.q(); ++c) {
      FqElem x{static_cast<std::uint16_t>(c)};
      FqElem y = x;
      for (int i = 0; i < F.r(); ++i) y = F.frobenius(y);
      CHECK(y == x);
    }
  }
}

TEST_CASE("primitive elements are the lex-least generators") {
  const Fq F4(2, 2);
  CHECK(F4.primitive_element() == F4.from_coeffs({0, 1}));  // w
  CHECK(F4.mult_order(F4.primitive_element()) == 3);

  CHECK(Fq(3, 1).primitive_element().code == 2);
  CHECK(Fq(5, 1).primitive_element().code == 2);
  CHECK(Fq(7, 1).primitive_element().code == 3);  // 2^3 = 1 mod 7

  for (const Fq& F : {Fq(2, 3), Fq(3, 2), Fq(5, 2), Fq(2, 6)})
    CHECK(F.mult_order(F.primitive_element()) == F.q() - 1);
}

TEST_CASE("fp_basis is the power basis") {
  const Fq F4(2, 2);
  const auto b4 = F4.fp_basis();
  REQUIRE(b4.size() == 2);
  CHECK(b4[0] == F4.one());
  CHECK(b4[1] == F4.from_coeffs({0, 1}));

  CHECK(Fq(3, 1).fp_basis().size() == 1);
  CHECK(Fq(3, 2).fp_basis()[1] == Fq(3, 2).from_coeffs({0, 1}));
}

TEST_CASE("power subgroups") {
  const Fq F5(5, 1);
  const auto squares = F5.power_subgroup(2);
  REQUIRE(squares.size() == 2);
  CHECK(squares[0].code == 1);
  CHECK(squares[1].code == 4);

  const Fq F7(7, 1);
  const auto cubes = F7.power_subgroup(3);
  REQUIRE(cubes.size() == 2);
  CHECK(cubes[0].code == 1);
  CHECK(cubes[1].code == 6);

  CHECK(F7.power_subgroup(1).size() == 6);
  CHECK_THROWS_AS(F7.power_subgroup(4), std::invalid_argument);

  for (const Fq& F : {Fq(2, 2), Fq(5, 1), Fq(7, 1), Fq(3, 2), Fq(13, 1),
                      Fq(2, 4)}) {
    for (std::uint32_t d = 1; d <= F.q() - 1; ++d) {
      if ((F.q() - 1) % d != 0) continue;
      CHECK(F.power_subgroup(d).size() * d == F.q() - 1);
    }
  }
}

TEST_CASE("field axioms, exhaustive for q <= 64") {
  for (const Fq& F : {Fq(2, 1), Fq(3, 1), Fq(2, 2), Fq(5, 1), Fq(7, 1),
                      Fq(2, 3), Fq(3, 2), Fq(2, 4), Fq(5, 2), Fq(3, 3),
                      Fq(7, 2), Fq(2, 5), Fq(2, 6)}) {
    const std::uint32_t q = F.q();
    for (std::uint32_t a = 0; a < q; ++a) {
      const FqElem x{static_cast<std::uint16_t>(a)};
      if (a != 0) {
        CHECK(F.mul(x, F.inv(x)) == F.one());
      }
      CHECK(F.add(x, F.neg(x)) == F.zero());
      for (std::uint32_t b = 0; b < q; ++b) {
        const FqElem y{static_cast<std::uint16_t>(b)};
        CHECK(F.mul(x, y) == F.mul(y, x));
        for (std::uint32_t c = 0; c < q; ++c) {
          const FqElem z{static_cast<std::uint16_t>(c)};
          CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
          CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("lex order round trip") {
  const Fq F(3, 2);
  std::set<std::uint32_t> seen;
  for (std::uint32_t i = 0; i < F.q(); ++i) {
    const FqElem x = F.element_at_lex(i);
    CHECK(F.lex_index(x) == i);
    seen.insert(x.code);
  }
  CHECK(seen.size() == F.q());
  // lex order: (0,0) < (0,1) < (0,2) < (1,0) < ...
  CHECK(F.element_at_lex(0) == F.zero());
  CHECK(F.element_at_lex(1) == F.from_coeffs({0, 1}));
  CHECK(F.element_at_lex(3) == F.from_coeffs({1, 0}));
}

TEST_CASE("different moduli give isomorphic multiplicative structure") {
  // multiset of multiplicative orders is modulus-independent
  const auto order_multiset = [](const Fq& F) {
    std::map<std::uint32_t, int> m;
    for (std::uint32_t c = 1; c < F.q(); ++c)
      m[F.mult_order({static_cast<std::uint16_t>(c)})]++;
    return m;
  };
  CHECK(order_multiset(Fq(2, 3, std::vector<int>{1, 0, 1, 1})) ==
        order_multiset(Fq(2, 3, std::vector<int>{1, 1, 0, 1})));
  CHECK(order_multiset(Fq(3, 2, std::vector<int>{1, 0, 1})) ==
        order_multiset(Fq(3, 2, std::vector<int>{2, 2, 1})));
}

TEST_SUITE_END();
