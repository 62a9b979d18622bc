#include <doctest.h>

#include "mfring/constructors.hpp"
#include "mfring/error.hpp"
#include "mfring/qseries.hpp"

using namespace mfring;

namespace {
QSeries rational_series(const FieldCtx& ctx, std::vector<long> c) {
  std::vector<CycloNum> out;
  for (long x : c) out.emplace_back(ctx, x);
  return QSeries(std::move(out));
}

long sigma_brute(long k, long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long p = 1;
      for (long i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}
}  // namespace

TEST_CASE("series ring operations") {
  const auto& q = cyclo_context(1);
  const QSeries a = rational_series(q, {1, 1, 0, 0, 0});
  const QSeries b = rational_series(q, {1, -1, 0, 0, 0});
  CHECK(a * b == rational_series(q, {1, 0, -1, 0, 0}));
  CHECK(a * QSeries::one(q, 5) == a);
  CHECK((a + rational_series(q, {1, 2, 3})).prec() == 3);
}

TEST_CASE("E4 squared against direct convolution") {
  const auto& q = cyclo_context(1);
  const QSeries e4 = eisenstein_E(4, 20, q);
  std::vector<long> c(20);
  for (long n = 0; n < 20; ++n) c[n] = n == 0 ? 1 : 240 * sigma_brute(3, n);
  std::vector<long> sq(20, 0);
  for (long i = 0; i < 20; ++i)
    for (long j = 0; i + j < 20; ++j) sq[i + j] += c[i] * c[j];
  CHECK(e4 * e4 == rational_series(q, sq));
  CHECK(multiply_serial(e4, e4) == e4 * e4);
}

TEST_CASE("V operator") {
  const auto& q = cyclo_context(1);
  CHECK(v_operator(rational_series(q, {1, 1}), 2) == rational_series(q, {1, 0, 1}));
  const QSeries e4 = eisenstein_E(4, 10, q);
  CHECK(v_operator(e4, 1) == e4);
  const QSeries e2v = v_operator(eisenstein_E(2, 10, q), 2);
  CHECK(e2v.prec() == 19);
  CHECK(e2v[1].is_zero());
  CHECK(e2v[2] == CycloNum(q, -24));
}

TEST_CASE("lowered operator") {
  const auto& q = cyclo_context(1);
  const QSeries a2 = lowered(eisenstein_E(4, 6, q), 2);
  CHECK(a2 == rational_series(q, {0, 1, 8, 28, 64, 126}));
  const QSeries a4 = lowered(eisenstein_C(2, 8, q), 2);
  CHECK(a4 == rational_series(q, {0, 1, 0, 4, 0, 6, 0, 8}));
  CHECK(lowered(rational_series(q, {1, 1, 0, 0, 0}), 3) == rational_series(q, {0, 1, 0, -1, 0}));
  CHECK_THROWS_AS(lowered(rational_series(q, {2, 1, 0}), 2), Error);
  CHECK_THROWS_AS(lowered(rational_series(q, {1, 0, 1}), 2), Error);
}

TEST_CASE("conjugation and vanishing order") {
  const auto& c4 = cyclo_context(4);
  const QSeries th = theta(10, c4);
  CHECK(conj_series(th) == th);
  const auto chi5 = named_character("chi5");
  CHECK(conj_series(eis_f(1, chi5, 12, c4)) == eis_f(1, chi5.conjugate(), 12, c4));
  const auto& q = cyclo_context(1);
  CHECK(vanishing_order(lowered(eisenstein_E(4, 6, q), 2)) == 1u);
  CHECK(!vanishing_order(QSeries(q, 10)).has_value());
  CHECK(vanishing_order(rational_series(q, {1, 1})) == 0u);
}

TEST_CASE("series rendering") {
  const auto& q = cyclo_context(1);
  CHECK(to_string(eisenstein_E(4, 4, q)) == "1 + 240*q + 2160*q^2 + 6720*q^3 + O(q^4)");
  CHECK(to_string(theta(5, q)) == "1 + 2*q + 2*q^4 + O(q^5)");
  CHECK(to_string(QSeries(q, 3)) == "0 + O(q^3)");
  CHECK(to_string(rational_series(q, {0, 1, -1})) == "q - q^2 + O(q^3)");
}
