#include <doctest.h>

#include <random>

#include "mfring/kernels.hpp"
#include "support/random.hpp"

using namespace mfring;

TEST_CASE("parallel Cauchy product equals the serial reference") {
  std::mt19937 rng(20241);
  for (unsigned L : {1u, 4u, 12u}) {
    const auto& ctx = cyclo_context(L);
    for (std::size_t prec : {1u, 7u, 48u, 130u}) {
      const auto a = testing::random_series(rng, ctx, prec);
      const auto b = testing::random_series(rng, ctx, prec);
      CHECK(kernels::cauchy_product(a.coeffs(), b.coeffs(), prec) ==
            kernels::cauchy_product_serial(a.coeffs(), b.coeffs(), prec));
    }
  }
}

TEST_CASE("parallel echelon equals the serial reference") {
  std::mt19937 rng(7);
  const auto& ctx = cyclo_context(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<kernels::Row> rows;
    for (int i = 0; i < 9; ++i) rows.push_back(testing::random_series(rng, ctx, 60, 2).coeffs());
    rows.push_back(rows[0]);
    const auto par = kernels::echelon(rows);
    const auto ser = kernels::echelon_serial(rows);
    CHECK(par.rank == ser.rank);
    CHECK(par.pivot_cols == ser.pivot_cols);
    CHECK(par.rows == ser.rows);
    CHECK(par.rank == 9);
  }
}

TEST_CASE("echelon rank of small matrices") {
  const auto& q = cyclo_context(1);
  auto row = [&](std::initializer_list<long> v) {
    kernels::Row r;
    for (long x : v) r.emplace_back(q, x);
    return r;
  };
  CHECK(kernels::echelon({}).rank == 0);
  CHECK(kernels::echelon({row({0, 0, 0})}).rank == 0);
  const auto e = kernels::echelon({row({0, 2, 4}), row({0, 1, 2}), row({1, 0, 0})});
  CHECK(e.rank == 2);
  CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(e.rows[1][2] == CycloNum(q, 2));
}
