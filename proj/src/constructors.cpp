#include "mfring/constructors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "mfring/error.hpp"

namespace mfring {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void check_prec(std::size_t prec) {
  if (prec == 0) throw Error(Errc::InvalidArgument, "series precision must be positive");
}

void check_primitive(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) {
    throw Error(Errc::ImprimitiveCharacter, "character " + chi.label() + " mod " + std::to_string(chi.modulus()) +
                                                " has conductor " + std::to_string(chi.conductor()));
  }
}

void check_parity(unsigned k, int parity, const std::string& what) {
  const int expected = (k % 2 == 0) ? 1 : -1;
  if (parity != expected) {
    throw Error(Errc::ParityViolation, what + "(-1) = " + std::to_string(parity) + " but weight " +
                                           std::to_string(k) + " needs " + std::to_string(expected));
  }
}

}  // namespace

Rational bernoulli(unsigned k) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= k) {
    const auto m = static_cast<unsigned>(table.size());
    Rational s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * table[j];
    Rational b = -s / (m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

Rational bernoulli_poly(unsigned k, const Rational& x) {
  Rational s = 0;
  for (unsigned j = 0; j <= k; ++j) {
    Rational p = 1;
    for (unsigned i = j; i < k; ++i) p *= x;
    s += Rational(binomial(k, j)) * bernoulli(j) * p;
  }
  return s;
}

CycloNum gen_bernoulli(unsigned k, const DirichletCharacter& chi, const FieldCtx& ctx) {
  using Key = std::tuple<unsigned, unsigned, std::vector<unsigned>, unsigned>;
  static std::mutex mu;
  static std::map<Key, CycloNum> cache;
  const Key key{k, chi.modulus(), chi.exps(), ctx.conductor()};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const unsigned N = chi.modulus();
  CycloNum s(ctx);
  for (unsigned a = 1; a <= N; ++a) {
    if (chi.value_exponent(a) < 0) continue;
    s += chi.eval(ctx, a) * bernoulli_poly(k, frac(a, N));
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), N, k - 1);
  s *= Rational(scale);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, s);
  return s;
}

QSeries eisenstein_E(unsigned k, std::size_t prec, const FieldCtx& ctx) {
  check_prec(prec);
  if (k < 2 || k % 2 != 0) throw Error(Errc::BadWeight, "E_k needs even k >= 2, got " + std::to_string(k));
  const Rational lead = Rational(-2 * static_cast<long>(k)) / bernoulli(k);
  std::vector<CycloNum> c;
  c.reserve(prec);
  c.emplace_back(ctx, 1);
  for (std::size_t n = 1; n < prec; ++n) c.emplace_back(ctx, lead * Rational(sigma(k - 1, n)));
  return QSeries(std::move(c));
}

QSeries eisenstein_C(unsigned N, std::size_t prec, const FieldCtx& ctx) {
  check_prec(prec);
  if (N < 2) throw Error(Errc::InvalidArgument, "C_N needs N >= 2");
  const QSeries e2 = eisenstein_E(2, prec, ctx);
  const std::size_t inner = (prec - 1 + N - 1) / N + 1;
  const QSeries e2v = v_operator(eisenstein_E(2, inner, ctx), N).truncate(prec);
  return frac(1, N - 1) * (Rational(N) * e2v - e2);
}

QSeries eis_f(unsigned k, const DirichletCharacter& chi, std::size_t prec, const FieldCtx& ctx) {
  check_prec(prec);
  if (k == 0) throw Error(Errc::BadWeight, "f_{k;chi} needs k >= 1");
  check_primitive(chi);
  check_parity(k, chi.parity(), chi.label());
  const CycloNum b = gen_bernoulli(k, chi, ctx);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "B_{k,chi} vanishes");
  const CycloNum lead = CycloNum(ctx, -2 * static_cast<long>(k)) * b.inverse();
  std::vector<CycloNum> c;
  c.reserve(prec);
  c.emplace_back(ctx, 1);
  for (std::size_t n = 1; n < prec; ++n) c.push_back(lead * twisted_sigma(ctx, k - 1, chi, n));
  return QSeries(std::move(c));
}

QSeries eis_g(unsigned k, const DirichletCharacter& chi, std::size_t prec, const FieldCtx& ctx) {
  check_prec(prec);
  if (k < 2) throw Error(Errc::BadWeight, "g_{k;chi} needs k >= 2");
  check_primitive(chi);
  check_parity(k, chi.parity(), chi.label());
  std::vector<CycloNum> c;
  c.reserve(prec);
  c.emplace_back(ctx);
  for (std::size_t n = 1; n < prec; ++n) c.push_back(twisted_sigma_cofactor(ctx, k - 1, chi, n));
  return QSeries(std::move(c));
}

QSeries eis_g2(unsigned k, const DirichletCharacter& chi, const DirichletCharacter& psi, std::size_t prec,
               const FieldCtx& ctx) {
  check_prec(prec);
  if (k == 0) throw Error(Errc::BadWeight, "g_{k;chi,psi} needs k >= 1");
  check_primitive(chi);
  check_primitive(psi);
  check_parity(k, chi.parity() * psi.parity(), chi.label() + "*" + psi.label());
  std::vector<CycloNum> c;
  c.reserve(prec);
  c.emplace_back(ctx);
  for (std::size_t n = 1; n < prec; ++n) c.push_back(twisted_sigma_pair(ctx, k - 1, chi, psi, n));
  return QSeries(std::move(c));
}

QSeries theta(std::size_t prec, const FieldCtx& ctx) {
  check_prec(prec);
  std::vector<CycloNum> c(prec, CycloNum(ctx));
  c[0] = CycloNum(ctx, 1);
  for (std::size_t n = 1; n * n < prec; ++n) c[n * n] = CycloNum(ctx, 2);
  return QSeries(std::move(c));
}

QSeries theta_bqf(long a, long b, long c, std::size_t prec, const FieldCtx& ctx) {
  check_prec(prec);
  if (a <= 0 || 4 * a * c - b * b <= 0) {
    throw Error(Errc::NotPositiveDefinite, "form [" + std::to_string(a) + "," + std::to_string(b) + "," +
                                               std::to_string(c) + "] is not positive definite");
  }
  const double lmin = (a + c - std::sqrt(double((a - c) * (a - c) + b * b))) / 2.0;
  const long box = 1 + static_cast<long>(std::ceil(std::sqrt(double(prec) / lmin)));
  std::vector<long> count(prec, 0);
  for (long m = -box; m <= box; ++m) {
    for (long n = -box; n <= box; ++n) {
      const long v = a * m * m + b * m * n + c * n * n;
      if (v < static_cast<long>(prec)) ++count[static_cast<std::size_t>(v)];
    }
  }
  std::vector<CycloNum> out;
  out.reserve(prec);
  for (long x : count) out.emplace_back(ctx, x);
  return QSeries(std::move(out));
}

QSeries alpha23(std::size_t prec, const FieldCtx& ctx) {
  return theta_bqf(1, 1, 6, prec, ctx) - theta_bqf(2, 1, 3, prec, ctx);
}

}  // namespace mfring
