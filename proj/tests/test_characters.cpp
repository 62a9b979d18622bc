#include <doctest.h>

#include <numeric>

#include "mfring/characters.hpp"
#include "mfring/error.hpp"

using namespace mfring;

TEST_CASE("unit group decompositions") {
  const auto g5 = unit_group(5);
  CHECK(g5->orders() == std::vector<unsigned>{4});
  CHECK(g5->generators() == std::vector<unsigned>{2});
  const auto g8 = unit_group(8);
  CHECK(g8->orders() == std::vector<unsigned>{2, 2});
  CHECK(unit_group(2)->order() == 1);
  CHECK(unit_group(2)->generators().empty());
  for (unsigned N = 1; N <= 300; ++N) {
    const auto g = unit_group(N);
    unsigned prod = 1;
    for (unsigned o : g->orders()) prod *= o;
    CHECK(prod == euler_phi(N));
  }
}

TEST_CASE("named character values") {
  const auto& c4 = cyclo_context(4);
  const auto rho4 = named_character("rho4");
  CHECK(rho4.eval(c4, 3) == CycloNum(c4, -1));
  CHECK(rho4.eval(c4, 2).is_zero());
  CHECK(rho4.parity() == -1);
  const auto chi5 = named_character("chi5");
  CHECK(chi5.eval(c4, 2) == root_of_unity(c4, 1, 4));
  CHECK(chi5.eval(c4, 4) == CycloNum(c4, -1));
  const auto& c6 = cyclo_context(6);
  const auto chi7 = named_character("chi7");
  CHECK(chi7.eval(c6, 3) * chi7.eval(c6, 3) == chi7.eval(c6, 2));
  const auto& c2 = cyclo_context(2);
  CHECK(named_character("rho3").eval(c2, -1) == CycloNum(c2, -1));
}

TEST_CASE("character relations") {
  const auto chi9 = named_character("chi9");
  const auto rho3 = named_character("rho3").lift(9);
  CHECK(chi9.pow(3) == rho3);
  const auto chi16 = named_character("chi16");
  CHECK(chi16.pow(2) == named_character("rho4") * named_character("rho8").lift(16));
  const auto chi5 = named_character("chi5");
  CHECK(chi5.pow(2) == named_character("rho5"));
  CHECK(named_character("rho5").order() == 2);
  CHECK(chi5.conjugate() == chi5.pow(3));
  CHECK(chi5 * DirichletCharacter::trivial(5) == chi5);
  CHECK(named_character("chi17").order() == 16);
  for (const auto& name : named_character_names()) {
    const auto chi = named_character(name);
    CHECK(chi.is_primitive());
  }
}

TEST_CASE("conductor and parity") {
  const auto rho3_9 = named_character("rho3").lift(9);
  CHECK(!rho3_9.is_primitive());
  CHECK(rho3_9.conductor() == 3);
  CHECK(DirichletCharacter::trivial(7).parity() == 1);
  CHECK(DirichletCharacter::trivial(7).conductor() == 1);
}

TEST_CASE("inconsistent assignments") {
  // 2 has order 8 mod 17; an order-16 value on it is impossible.
  CHECK_THROWS_AS(DirichletCharacter::from_assignments(17, {{2, {1, 16}}}), Error);
  try {
    DirichletCharacter::from_assignments(17, {{2, {1, 16}}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidOrder);
  }
}

TEST_CASE("parsing character expressions") {
  CHECK(parse_character("pow(chi11,5)") == named_character("rho11"));
  CHECK(parse_character("conj(chi5)") == named_character("chi5").pow(3));
  CHECK(parse_character("mul(rho3, rho4)").modulus() == 12);
  CHECK(parse_character("one5").is_trivial());
  CHECK_THROWS_AS(parse_character("nope"), Error);
  CHECK_THROWS_AS(parse_character("pow(chi5"), Error);
}

TEST_CASE("twisted divisor sums") {
  const auto& q = cyclo_context(1);
  CHECK(twisted_sigma(q, 1, DirichletCharacter::trivial(1), 6) == CycloNum(q, 12));
  const auto& c2 = cyclo_context(2);
  const auto rho4 = named_character("rho4");
  CHECK(twisted_sigma(c2, 0, rho4, 5) == CycloNum(c2, 2));
  CHECK(twisted_sigma(c2, 0, rho4, 3).is_zero());
  CHECK(twisted_sigma(c2, 0, rho4, 1).is_one());
  for (unsigned long n = 1; n < 60; ++n)
    CHECK(twisted_sigma(q, 3, DirichletCharacter::trivial(1), n) == CycloNum(q, Rational(sigma(3, n))));
}
