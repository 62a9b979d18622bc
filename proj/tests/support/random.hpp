#pragma once

// Seeded generators of cyclotomic numbers and series for randomized tests.

#include <random>
#include <vector>

#include "mfring/qseries.hpp"

namespace mfring::testing {

inline CycloNum random_cyclo(std::mt19937& rng, const FieldCtx& ctx, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(ctx.degree());
  for (auto& x : c) x = frac(num(rng), den(rng));
  return CycloNum::from_poly(ctx, std::move(c));
}

inline CycloNum random_nonzero(std::mt19937& rng, const FieldCtx& ctx) {
  CycloNum x = random_cyclo(rng, ctx);
  while (x.is_zero()) x = random_cyclo(rng, ctx);
  return x;
}

inline QSeries random_series(std::mt19937& rng, const FieldCtx& ctx, std::size_t prec, int bound = 9) {
  std::vector<CycloNum> c;
  for (std::size_t i = 0; i < prec; ++i) c.push_back(random_cyclo(rng, ctx, bound));
  return QSeries(std::move(c));
}

}  // namespace mfring::testing
