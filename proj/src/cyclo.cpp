#include "mfring/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mfring/error.hpp"

namespace mfring {

Rational frac(long a, long b) {
  if (b == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

// Exact quotient of a by the monic polynomial b (remainder must vanish).
IntPoly exact_div_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer t = a[i];
    q[i - db] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Division with remainder over Q; divisor must be nonzero after trim.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const Rational lead_inv = 1 / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational t = r.back() * lead_inv;
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= t * b[j];
    trim(r);
  }
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Reduces coefficients in place modulo the monic minpoly; result has length deg.
void reduce_in_place(std::vector<Rational>& p, const std::vector<Integer>& minpoly) {
  const std::size_t d = minpoly.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (sgn(p[k]) == 0) continue;
    const Rational t = p[k];
    for (std::size_t m = 0; m < d; ++m) {
      if (minpoly[m] != 0) p[k - d + m] -= t * minpoly[m];
    }
  }
  p.resize(d, 0);
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_div_monic(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

FieldCtx::FieldCtx(unsigned L) : conductor_(L), minpoly_(cyclotomic_polynomial(L)) {
  const std::size_t d = degree();
  powers_.reserve(L);
  for (unsigned j = 0; j < L; ++j) {
    std::vector<Rational> p(std::max<std::size_t>(j + 1, d), 0);
    p[j] = 1;
    reduce_in_place(p, minpoly_);
    powers_.push_back(std::move(p));
  }
}

const FieldCtx& cyclo_context(unsigned L) {
  if (L == 0) throw Error(Errc::InvalidArgument, "conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[L];
  if (!slot) slot.reset(new FieldCtx(L));
  return *slot;
}

CycloNum::CycloNum(const FieldCtx& ctx) : ctx_(&ctx), c_(ctx.degree(), 0) {}

CycloNum::CycloNum(const FieldCtx& ctx, const Rational& r) : ctx_(&ctx), c_(ctx.degree(), 0) {
  c_[0] = r;
}

CycloNum CycloNum::from_poly(const FieldCtx& ctx, std::vector<Rational> coeffs) {
  CycloNum out(ctx);
  if (coeffs.size() < ctx.degree()) coeffs.resize(ctx.degree(), 0);
  reduce_in_place(coeffs, ctx.minpoly());
  out.c_ = std::move(coeffs);
  return out;
}

bool CycloNum::is_zero() const noexcept {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycloNum::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycloNum::is_one() const noexcept { return is_rational() && c_[0] == 1; }

void CycloNum::check_same(const CycloNum& o) const {
  if (ctx_ != o.ctx_) {
    throw Error(Errc::ContextMismatch, "operands live in Q(zeta_" + std::to_string(ctx_->conductor()) +
                                           ") and Q(zeta_" + std::to_string(o.ctx_->conductor()) + ")");
  }
}

CycloNum CycloNum::operator-() const {
  CycloNum out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.check_same(b);
  CycloNum out(*a.ctx_);
  out.add_product(a, b);
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

void CycloNum::add_product(const CycloNum& a, const CycloNum& b) {
  check_same(a);
  check_same(b);
  const std::size_t d = c_.size();
  if (d == 1) {
    if (sgn(a.c_[0]) != 0 && sgn(b.c_[0]) != 0) c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  // Fast paths for rational factors keep the common real-valued case cheap.
  if (a.is_rational()) {
    if (sgn(a.c_[0]) == 0) return;
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(b.c_[i]) != 0) c_[i] += a.c_[0] * b.c_[i];
    return;
  }
  if (b.is_rational()) {
    if (sgn(b.c_[0]) == 0) return;
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(a.c_[i]) != 0) c_[i] += b.c_[0] * a.c_[i];
    return;
  }
  std::vector<Rational> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  reduce_in_place(prod, ctx_->minpoly());
  for (std::size_t i = 0; i < d; ++i) c_[i] += prod[i];
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in Q(zeta_" +
                                                       std::to_string(ctx_->conductor()) + ")");
  if (is_rational()) return CycloNum(*ctx_, 1 / c_[0]);
  // Extended Euclid: track s with s * x == r (mod Phi).
  RatPoly m(ctx_->minpoly().begin(), ctx_->minpoly().end());
  RatPoly r0 = m, r1 = c_;
  trim(r1);
  RatPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because Phi_L is irreducible.
  const Rational k = 1 / r1[0];
  for (auto& x : s1) x *= k;
  return from_poly(*ctx_, std::move(s1));
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result(*ctx_, 1);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

CycloNum root_of_unity(const FieldCtx& ctx, long a, unsigned b) {
  if (b == 0 || ctx.conductor() % b != 0) {
    throw Error(Errc::ConductorMismatch, "zeta_" + std::to_string(b) + " is not in Q(zeta_" +
                                             std::to_string(ctx.conductor()) + ")");
  }
  const long bb = static_cast<long>(b);
  const long r = ((a % bb) + bb) % bb;
  const unsigned j = static_cast<unsigned>(r) * (ctx.conductor() / b);
  return CycloNum::from_poly(ctx, ctx.power(j));
}

CycloNum conj(const CycloNum& x) {
  const FieldCtx& ctx = x.field();
  const unsigned L = ctx.conductor();
  std::vector<Rational> out(ctx.degree(), 0);
  const auto& c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const auto& p = ctx.power(static_cast<unsigned>((L - i % L) % L));
    for (std::size_t k = 0; k < out.size(); ++k)
      if (sgn(p[k]) != 0) out[k] += c[i] * p[k];
  }
  return CycloNum::from_poly(ctx, std::move(out));
}

std::pair<Rational, Rational> re_im(const CycloNum& value, unsigned n) {
  if (n != 3 && n != 4 && n != 6) {
    throw Error(Errc::InvalidArgument, "re_im is defined for n in {3,4,6}, got " + std::to_string(n));
  }
  const CycloNum z = root_of_unity(value.field(), 1, n);
  const auto& zc = z.coords();
  std::size_t j = 1;
  while (j < zc.size() && sgn(zc[j]) == 0) ++j;
  // zeta_n is irrational for n >= 3, so some j >= 1 carries it.
  const Rational im = value.coords()[j] / zc[j];
  const Rational re = value.coords()[0] - im * zc[0];
  CycloNum recomposed = z * im;
  recomposed += CycloNum(value.field(), re);
  if (recomposed != value) {
    throw Error(Errc::NotInSpan, to_string(value) + " is not in span{1, zeta_" + std::to_string(n) + "}");
  }
  return {re, im};
}

std::string to_string(const CycloNum& x) {
  const auto& c = x.coords();
  const std::string sym = "z" + std::to_string(x.field().conductor());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    Rational mag = abs(c[i]);
    const bool neg = sgn(c[i]) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << sym;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << to_string(x); }

}  // namespace mfring
