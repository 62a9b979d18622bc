#include <doctest.h>

#include "mfring/cyclo.hpp"
#include "mfring/error.hpp"

using namespace mfring;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(cyclo_context(12).degree() == 4);
  CHECK(cyclo_context(1).degree() == 1);
  for (unsigned n = 1; n <= 60; ++n) CHECK(cyclo_context(n).degree() == euler_phi(n));
}

TEST_CASE("Phi_L divides x^L - 1") {
  for (unsigned L = 1; L <= 40; ++L) {
    const auto& ctx = cyclo_context(L);
    std::vector<Rational> xl(L + 1, 0);
    xl[0] = -1;
    xl[L] = 1;
    CHECK(CycloNum::from_poly(ctx, xl).is_zero());
  }
}

TEST_CASE("roots of unity") {
  const auto& c4 = cyclo_context(4);
  CHECK(root_of_unity(c4, 1, 2) == CycloNum(c4, -1));
  CHECK(root_of_unity(c4, 1, 4).coords() == std::vector<Rational>{0, 1});
  const auto& c12 = cyclo_context(12);
  CHECK(to_string(root_of_unity(c12, 1, 6)) == "z12^2");
  CHECK_THROWS_AS(root_of_unity(c4, 1, 3), Error);
  try {
    root_of_unity(c4, 1, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConductorMismatch);
  }
}

TEST_CASE("field arithmetic") {
  const auto& c4 = cyclo_context(4);
  const CycloNum i = root_of_unity(c4, 1, 4);
  const CycloNum x = CycloNum(c4, 1) + i;
  CHECK((x * x.inverse()).is_one());
  CHECK((CycloNum(c4, 1) + i) * (CycloNum(c4, 1) - i) == CycloNum(c4, 2));
  CHECK(x + CycloNum(c4) == x);
  CHECK_THROWS_AS(CycloNum(c4).inverse(), Error);
  CHECK_THROWS_AS(x + CycloNum(cyclo_context(3), 1), Error);
}

TEST_CASE("conjugation") {
  const auto& c4 = cyclo_context(4);
  const CycloNum i = root_of_unity(c4, 1, 4);
  CHECK(conj(i) == -i);
  CHECK(conj(CycloNum(c4, Rational(3, 2))) == CycloNum(c4, Rational(3, 2)));
}

TEST_CASE("re_im coordinates") {
  const auto& c6 = cyclo_context(6);
  const CycloNum x = CycloNum(c6, 3) + Rational(2) * root_of_unity(c6, 1, 6);
  CHECK(re_im(x, 6) == std::pair<Rational, Rational>(3, 2));
  const auto& c4 = cyclo_context(4);
  CHECK(re_im(root_of_unity(c4, 1, 4), 4) == std::pair<Rational, Rational>(0, 1));
  const auto& c12 = cyclo_context(12);
  CHECK_THROWS_AS(re_im(root_of_unity(c12, 1, 12), 4), Error);
  const CycloNum y = CycloNum(c12, Rational(1, 2)) - Rational(5) * root_of_unity(c12, 1, 3);
  const auto [re, im] = re_im(y, 3);
  CHECK(re == Rational(1, 2));
  CHECK(im == -5);
}

TEST_CASE("rendering") {
  const auto& c12 = cyclo_context(12);
  const CycloNum x = CycloNum(c12, Rational(1, 2)) - Rational(3) * root_of_unity(c12, 2, 12);
  CHECK(to_string(x) == "1/2 - 3*z12^2");
  CHECK(to_string(CycloNum(c12)) == "0");
  CHECK(to_string(root_of_unity(cyclo_context(4), 3, 4)) == "-z4");
}
