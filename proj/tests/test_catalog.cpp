#include <doctest.h>

#include "mfring/catalog.hpp"
#include "mfring/error.hpp"

using namespace mfring;

namespace {
const Catalog& shipped() {
  static const Catalog c = Catalog::load(Catalog::default_path());
  return c;
}
HalfWeight w(int k) { return HalfWeight::integer(k); }

Errc load_error(const std::string& text) {
  try {
    Catalog::from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("catalog loaded");
  return Errc::InvalidArgument;
}
}  // namespace

TEST_CASE("group syntax") {
  CHECK(parse_group("full").to_string() == "full");
  CHECK(parse_group("gamma0:2").to_string() == "gamma0:2");
  CHECK(parse_group("gamma1:7").to_string() == "gamma1:7");
  CHECK(parse_group("gammaH:11:[3]").to_string() == "gammaH:11:[3]");
  CHECK(parse_group("gamma1:12:half").half);
  CHECK(parse_group("gammaH:11:[3]").key() == parse_group("gammaH:11:[4]").key());
  CHECK(parse_group("gammaH:7:[1]").key() == parse_group("gamma1:7").key());
  CHECK_THROWS_AS(parse_group("gamma1:6:half"), Error);
  CHECK_THROWS_AS(parse_group("gammaH:12:[2]"), Error);
  CHECK_THROWS_AS(parse_group("sl2"), Error);
}

TEST_CASE("indices and Sturm precisions") {
  CHECK(group_index(parse_group("full")) == 1);
  CHECK(group_index(parse_group("gamma0:2")) == 3);
  CHECK(group_index(parse_group("gamma1:7")) == 24);
  CHECK(group_index(parse_group("gammaH:11:[3]")) == 12);
  CHECK(group_index(parse_group("gamma1:16")) == 96);
  CHECK(sturm_prec(parse_group("full"), w(12)) == 3);
  CHECK(sturm_prec(parse_group("gamma1:7"), w(2)) == 6);
  CHECK(sturm_prec(parse_group("gamma1:4:half"), HalfWeight{1}) == 1);
  CHECK(sturm_prec(parse_group("gamma1:4:half"), HalfWeight{5}) == 2);
}

TEST_CASE("dimension rows") {
  const Catalog& c = shipped();
  CHECK(c.dim(parse_group("full"), w(12)) == 2);
  CHECK(c.dim(parse_group("full"), w(2)) == 0);
  CHECK(c.dim(parse_group("gamma0:2"), w(8)) == 3);
  for (int k = 1; k <= 20; ++k) CHECK(c.dim(parse_group("gammaH:11:[3]"), w(k)) == k);
  for (int k = 0; k <= 12; ++k) {
    CHECK(c.dim(parse_group("gamma1:5"), w(k)) == k + 1);
    CHECK(c.dim(parse_group("gamma1:7"), w(k)) == 2 * k + 1);
    CHECK(c.dim(parse_group("gamma1:9"), w(k)) == 3 * k + 1);
  }
  for (int k = 1; k <= 12; ++k) CHECK(c.dim(parse_group("gammaH:13:[3]"), w(k)) == k + 4 * (k / 3) + 1);
  CHECK(c.dim(parse_group("gamma1:4:half"), HalfWeight{5}) == c.dim(parse_group("gamma1:4"), w(2)));
  CHECK(c.dim(parse_group("gamma1:12:half"), HalfWeight{3}) == 1 + c.dim(parse_group("gamma1:12"), w(1)));
  CHECK_THROWS_AS(c.dim(parse_group("gamma1:8:half"), HalfWeight{3}), Error);
  CHECK_THROWS_AS(c.dim(parse_group("full"), w(3)), Error);
  CHECK_THROWS_AS(c.dim(parse_group("gammaH:11:[3]"), w(0)), Error);
  CHECK_THROWS_AS(c.dim(parse_group("gamma1:97"), w(2)), Error);
}

TEST_CASE("named forms and their weights") {
  const Catalog& c = shipped();
  CHECK(c.form("alpha1").weight == w(12));
  CHECK(c.form("alpha7").weight == w(1));
  CHECK(c.form("th").weight == HalfWeight{1});
  CHECK(c.weight_of(parse_expr("mul e4 e6")) == 20);
  CHECK(!c.weight_of(parse_expr("zeta 1 4")).has_value());
  CHECK(c.conductor_of(parse_expr("fchi5")) == 4);
  CHECK(c.uses_quasi(parse_expr("sub E2 E2")));
  CHECK(!c.uses_quasi(parse_expr("alpha1")));
  CHECK_THROWS_AS(c.form("nothing"), Error);
}

TEST_CASE("form lookup") {
  const Catalog& c = shipped();
  const QSeries a1 = lookup_form(c, "alpha1", 5);
  CHECK(to_string(a1) == "q - 24*q^2 + 252*q^3 - 1472*q^4 + O(q^5)");
  CHECK(to_string(lookup_form(c, "theta", 5)) == "1 + 2*q + 2*q^4 + O(q^5)");
  CHECK(to_string(lookup_form(c, "E4", 4)) == "1 + 240*q + 2160*q^2 + 6720*q^3 + O(q^4)");
  CHECK(to_string(lookup_form(c, "f[1;rho3]", 3)) == "1 + 6*q + O(q^3)");
  CHECK_THROWS_AS(lookup_form(c, "nope", 5), Error);
}

TEST_CASE("presentations load with their relations") {
  const Catalog& c = shipped();
  CHECK(c.presentations().size() >= 20);
  CHECK(c.presentation("14<9>").relations.size() == 1);
  CHECK(c.presentation("13<3>").relations_unknown);
  CHECK(c.presentation("7").hilbert.has_value());
  CHECK_THROWS_AS(c.presentation("99"), Error);
  CHECK(c.identities().size() >= 12);
}

TEST_CASE("catalog validation") {
  CHECK(load_error("{") == Errc::Catalog);
  CHECK(load_error(R"({"forms":[{"name":"E4","weight":8,"group":"full","expr":"E4"}]})") == Errc::Catalog);
  CHECK(load_error(R"({"forms":[{"name":"a","weight":8,"group":"full","expr":"b"},)"
                   R"({"name":"b","weight":8,"group":"full","expr":"a"}]})") == Errc::Catalog);
  CHECK(load_error(R"({"forms":[{"name":"a","weight":8,"group":"full","expr":"zz"}]})") == Errc::UnknownForm);
  CHECK(load_error(R"({"forms":[{"name":"a","weight":6,"group":"full","expr":"E4"}]})") == Errc::Catalog);
  CHECK(load_error(R"({"groups":[{"group":"full","domain":"even","dim":"[k/12"}]})") == Errc::Parse);
  const Catalog ok = Catalog::from_json(R"({"forms":[{"name":"a","weight":16,"group":"full","expr":"pow E4 2"}]})");
  CHECK(ok.form("a").weight == w(8));
}
