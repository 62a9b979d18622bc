#include "mfring/qseries.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mfring/error.hpp"
#include "mfring/kernels.hpp"

namespace mfring {

std::string to_string(HalfWeight w) {
  if (w.is_integral()) return std::to_string(w.doubled / 2);
  return std::to_string(w.doubled) + "/2";
}

QSeries::QSeries(const FieldCtx& ctx, std::size_t prec) : ctx_(&ctx), c_(prec, CycloNum(ctx)) {
  if (prec == 0) throw Error(Errc::InvalidArgument, "series precision must be positive");
}

QSeries::QSeries(std::vector<CycloNum> coeffs) : ctx_(nullptr), c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(Errc::InvalidArgument, "series precision must be positive");
  ctx_ = &c_.front().field();
  for (const auto& c : c_) {
    if (&c.field() != ctx_) throw Error(Errc::ContextMismatch, "series coefficients in different fields");
  }
}

QSeries QSeries::constant(const CycloNum& c, std::size_t prec) {
  QSeries out(c.field(), prec);
  out.c_[0] = c;
  return out;
}

QSeries QSeries::one(const FieldCtx& ctx, std::size_t prec) { return constant(CycloNum(ctx, 1), prec); }

QSeries QSeries::truncate(std::size_t prec) const {
  if (prec > c_.size()) {
    throw Error(Errc::PrecisionTooLow, "cannot extend O(q^" + std::to_string(c_.size()) + ") to O(q^" +
                                           std::to_string(prec) + ")");
  }
  return QSeries(std::vector<CycloNum>(c_.begin(), c_.begin() + static_cast<long>(prec)));
}

namespace {
void check_fields(const QSeries& f, const QSeries& g) {
  if (&f.field() != &g.field()) {
    throw Error(Errc::ContextMismatch, "series over Q(zeta_" + std::to_string(f.field().conductor()) +
                                           ") and Q(zeta_" + std::to_string(g.field().conductor()) + ")");
  }
}
}  // namespace

QSeries QSeries::operator-() const {
  QSeries out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  check_fields(f, g);
  QSeries out = f.truncate(std::min(f.prec(), g.prec()));
  for (std::size_t i = 0; i < out.prec(); ++i) out.c_[i] += g.c_[i];
  return out;
}

QSeries operator-(const QSeries& f, const QSeries& g) {
  check_fields(f, g);
  QSeries out = f.truncate(std::min(f.prec(), g.prec()));
  for (std::size_t i = 0; i < out.prec(); ++i) out.c_[i] -= g.c_[i];
  return out;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  check_fields(f, g);
  const std::size_t p = std::min(f.prec(), g.prec());
  if (p < kernels::kParallelThreshold) return multiply_serial(f, g);
  return QSeries(kernels::cauchy_product(f.coeffs(), g.coeffs(), p));
}

QSeries multiply_serial(const QSeries& f, const QSeries& g) {
  check_fields(f, g);
  const std::size_t p = std::min(f.prec(), g.prec());
  return QSeries(kernels::cauchy_product_serial(f.coeffs(), g.coeffs(), p));
}

QSeries operator*(const CycloNum& c, const QSeries& f) {
  if (&c.field() != &f.field()) throw Error(Errc::ContextMismatch, "scalar and series in different fields");
  QSeries out(f);
  for (auto& x : out.c_) x = c * x;
  return out;
}

QSeries operator*(const Rational& c, const QSeries& f) {
  QSeries out(f);
  for (auto& x : out.c_) x *= c;
  return out;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries result = one(*ctx_, prec());
  QSeries base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const QSeries& f, const QSeries& g) {
  return &f.field() == &g.field() && f.c_ == g.c_;
}

QSeries v_operator(const QSeries& f, unsigned h) {
  if (h == 0) throw Error(Errc::InvalidArgument, "V-operator index must be positive");
  const std::size_t out_prec = h * (f.prec() - 1) + 1;
  std::vector<CycloNum> out(out_prec, CycloNum(f.field()));
  for (std::size_t n = 0; n < f.prec(); ++n) out[h * n] = f[n];
  return QSeries(std::move(out));
}

QSeries lowered(const QSeries& f, unsigned h) {
  if (f.prec() < 2 || !f[0].is_one()) {
    throw Error(Errc::BadLeadingShape, "lowered operator needs f = 1 + a*q + ..., got constant term " +
                                           to_string(f[0]));
  }
  if (f[1].is_zero()) throw Error(Errc::BadLeadingShape, "lowered operator needs a nonzero q coefficient");
  const CycloNum inv = f[1].inverse();
  return inv * (f - v_operator(f, h).truncate(f.prec()));
}

QSeries conj_series(const QSeries& f) {
  std::vector<CycloNum> out;
  out.reserve(f.prec());
  for (const auto& c : f.coeffs()) out.push_back(conj(c));
  return QSeries(std::move(out));
}

std::optional<std::size_t> vanishing_order(const QSeries& f) {
  for (std::size_t i = 0; i < f.prec(); ++i)
    if (!f[i].is_zero()) return i;
  return std::nullopt;
}

std::string to_string(const QSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.prec(); ++i) {
    const CycloNum& c = f[i];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      const Rational& r = c.rational_part();
      negative = sgn(r) < 0;
      const Rational mag = abs(r);
      if (i == 0) {
        body = to_string(mag);
      } else if (mag != 1) {
        body = to_string(mag) + "*";
      }
    } else {
      body = "(" + to_string(c) + ")";
      if (i > 0) body += "*";
    }
    if (i == 1) body += "q";
    if (i > 1) body += "q^" + std::to_string(i);
    if (first) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << f.prec() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& f) { return os << to_string(f); }

}  // namespace mfring
