#include <doctest.h>

#include "mfring/error.hpp"
#include "mfring/genpoly.hpp"

using namespace mfring;

namespace {
const Catalog& shipped() {
  static const Catalog c = Catalog::load(Catalog::default_path());
  return c;
}
HalfWeight w(int k) { return HalfWeight::integer(k); }

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("weighted monomials") {
  CHECK(weighted_monomials({w(4), w(6)}, w(12)).size() == 2);
  CHECK(weighted_monomials({w(4), w(6)}, w(2)).empty());
  CHECK(weighted_monomials({w(1), w(2), w(3)}, w(0)).size() == 1);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(weighted_monomials({w(1), w(1), w(1), w(1)}, w(k)).size() == binom(k + 3, 3));
  const auto m = weighted_monomials({w(1), w(2)}, w(4));
  CHECK(m == std::vector<Exponents>{{0, 2}, {2, 1}, {4, 0}});
  for (const auto& e : weighted_monomials({HalfWeight{1}, w(1), HalfWeight{3}}, HalfWeight{7}))
    CHECK(monomial_weight({HalfWeight{1}, w(1), HalfWeight{3}}, e) == 7);
}

TEST_CASE("polynomial arithmetic") {
  const auto& ctx = cyclo_context(4);
  const std::vector<HalfWeight> ws{w(1), w(1)};
  const GenPoly x = GenPoly::variable(ctx, ws, 0);
  const GenPoly y = GenPoly::variable(ctx, ws, 1);
  const GenPoly sq = (x + y) * (x - y);
  CHECK(sq == x.pow(2) - y.pow(2));
  CHECK(sq.weight() == 4);
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS((x + x * y).weight(), Error);
  const GenPoly iz = root_of_unity(ctx, 1, 4) * x;
  CHECK(iz.conjugate({1, 0}) == root_of_unity(ctx, -1, 4) * y);
  const auto coords = (x * y + CycloNum(ctx, 3) * y.pow(2)).coordinates(weighted_monomials(ws, w(2)));
  CHECK(coords == std::vector<CycloNum>{CycloNum(ctx, 3), CycloNum(ctx, 1), CycloNum(ctx, 0)});
}

TEST_CASE("relation parsing") {
  const Catalog& c = shipped();
  const auto& p = c.presentation("9");
  const auto& ctx = cyclo_context(p.conductor);
  const auto rels = presentation_relations(p, ctx);
  CHECK(rels.size() == 3);
  for (const auto& r : rels) CHECK(r.poly.weight() == 4);
  std::vector<std::size_t> perm;
  for (const auto& [name, wt] : p.gens) {
    const auto& target = p.conj.at(name);
    for (std::size_t j = 0; j < p.gens.size(); ++j)
      if (p.gens[j].first == target) perm.push_back(j);
  }
  CHECK(rels[1].poly == rels[0].poly.conjugate(perm));
  CHECK_THROWS_AS(parse_genpoly("unknown_gen^2", p, ctx), Error);
  CHECK_THROWS_AS(parse_genpoly("(", p, ctx), Error);

  const auto& h = c.presentation("16h");
  const auto hrels = presentation_relations(h, cyclo_context(h.conductor));
  CHECK(hrels.size() == 4);
  CHECK(hrels[0].poly.weight() == 2);
  CHECK(hrels[1].poly.weight() == 4);
}

TEST_CASE("evaluating generator polynomials") {
  const Catalog& c = shipped();
  const auto& q = cyclo_context(2);
  Evaluator ev(c, q);
  MonomialEvaluator m({ev.series(parse_expr("C3"), 30), ev.series(parse_expr("frho3"), 30)});
  const std::vector<HalfWeight> ws{w(2), w(1)};
  const GenPoly p = GenPoly::variable(q, ws, 0) - GenPoly::variable(q, ws, 1).pow(2);
  CHECK(!vanishing_order(m.eval(p)).has_value());
  CHECK(m.eval(GenPoly::variable(q, ws, 1)) == ev.series(parse_expr("frho3"), 30));

  const auto& p7 = c.presentation("7");
  const auto& ctx7 = cyclo_context(p7.conductor);
  Evaluator ev7(c, ctx7);
  std::vector<QSeries> gens;
  for (const auto& [name, wt] : p7.gens) gens.push_back(ev7.series(parse_expr(name), 20));
  MonomialEvaluator m7(gens);
  for (const auto& r : presentation_relations(p7, ctx7)) CHECK(!vanishing_order(m7.eval(r.poly)).has_value());
}
