#include "mfring/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mfring/error.hpp"

namespace mfring {

namespace {

void trim(std::vector<Integer>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::vector<Integer> denominator_poly(const std::vector<int>& den) {
  std::vector<Integer> p{1};
  for (int w : den) {
    std::vector<Integer> f(static_cast<std::size_t>(w) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(w)] = -1;
    p = multiply(p, f);
  }
  return p;
}

std::string exponent(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

std::string monomial(int doubled) {
  if (doubled == 0) return "1";
  if (doubled == 2) return "t";
  return "t^" + exponent(doubled);
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<Integer> numerator, std::vector<int> denom_doubled)
    : num_(std::move(numerator)), den_(std::move(denom_doubled)) {
  if (num_.empty()) num_.push_back(0);
  trim(num_);
  for (int w : den_)
    if (w <= 0) throw Error(Errc::InvalidArgument, "denominator weights must be positive");
  std::sort(den_.begin(), den_.end());
}

bool HilbertSeries::integral() const {
  for (int w : den_)
    if (w % 2 != 0) return false;
  for (std::size_t i = 1; i < num_.size(); i += 2)
    if (num_[i] != 0) return false;
  return true;
}

std::vector<Integer> HilbertSeries::expand_doubled(std::size_t D) const {
  std::vector<Integer> out(D + 1, 0);
  for (std::size_t i = 0; i < std::min(num_.size(), D + 1); ++i) out[i] = num_[i];
  // Divide by each (1 - t^w): out[n] += out[n-w] in increasing n.
  for (int w : den_) {
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t n = step; n <= D; ++n) out[n] += out[n - step];
  }
  return out;
}

std::vector<Integer> HilbertSeries::expand(std::size_t T) const {
  const auto doubled = expand_doubled(2 * T);
  std::vector<Integer> out(T + 1);
  for (std::size_t k = 0; k <= T; ++k) out[k] = doubled[2 * k];
  return out;
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  // Compare as rational functions: N_a * D_b == N_b * D_a.
  return multiply(a.num_, denominator_poly(b.den_)) == multiply(b.num_, denominator_poly(a.den_));
}

HilbertSeries hilbert_free(const std::vector<HalfWeight>& weights) {
  if (weights.empty()) throw Error(Errc::InvalidArgument, "free algebra needs at least one generator");
  std::vector<int> den;
  for (auto w : weights) den.push_back(w.doubled);
  return HilbertSeries({1}, std::move(den));
}

HilbertSeries adjoin_square_root(const HilbertSeries& base, HalfWeight n) {
  std::vector<Integer> f(static_cast<std::size_t>(n.doubled) + 1, 0);
  f[0] += 1;
  f[static_cast<std::size_t>(n.doubled)] += 1;
  return HilbertSeries(multiply(base.numerator(), f), base.denominator());
}

HilbertSeries rational_normal_series(unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "rational normal series needs n >= 1");
  return HilbertSeries({1, 0, Integer(static_cast<long>(n) - 1)}, {2, 2});
}

HilbertSeries fit_numerator(const std::vector<Integer>& seq, std::vector<int> denom_doubled) {
  const auto d = denominator_poly(denom_doubled);
  std::vector<Integer> num(seq.size(), 0);
  for (std::size_t n = 0; n < seq.size(); ++n)
    for (std::size_t j = 0; j < d.size() && j <= n; ++j) num[n] += d[j] * seq[n - j];
  return HilbertSeries(std::move(num), std::move(denom_doubled));
}

HilbertSeries quoted_pair_series(std::size_t horizon) {
  std::vector<Integer> seq(2 * horizon + 1, 0);
  for (std::size_t k = 0; k <= horizon; ++k) seq[2 * k] = static_cast<long>(k + k / 2 + 1);
  return fit_numerator(seq, {2, 2, 4, 4});
}

std::string to_string(const HilbertSeries& hs) {
  std::ostringstream os;
  bool first = true;
  const auto& num = hs.numerator();
  std::size_t terms = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    ++terms;
    const Integer mag = abs(num[i]);
    const bool neg = num[i] < 0;
    std::string body = i == 0 ? mag.get_str() : monomial(static_cast<int>(i));
    if (i > 0 && mag != 1) body = mag.get_str() + "*" + body;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + ")) << body;
    first = false;
  }
  if (first) os << "0";
  std::string numerator = os.str();
  if (terms > 1) numerator = "(" + numerator + ")";
  std::string den;
  for (int w : hs.denominator()) den += "(1-" + monomial(w) + ")";
  if (den.empty()) return numerator;
  if (hs.denominator().size() == 1) return numerator + " / " + den;
  return numerator + " / (" + den + ")";
}

}  // namespace mfring
