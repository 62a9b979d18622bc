#pragma once

// Hilbert series N(t) / prod (1 - t^{w_i}) of weighted graded rings.
// Exponents are doubled weights, so half-integer gradings stay integral.

#include <cstddef>
#include <string>
#include <vector>

#include "mfring/cyclo.hpp"
#include "mfring/qseries.hpp"

namespace mfring {

class HilbertSeries {
 public:
  HilbertSeries(std::vector<Integer> numerator, std::vector<int> denom_doubled);

  /// Coefficients by doubled exponent.
  const std::vector<Integer>& numerator() const noexcept { return num_; }
  const std::vector<int>& denominator() const noexcept { return den_; }
  /// True when every exponent that can occur is even, i.e. only integer weights.
  bool integral() const;

  /// Expansion coefficients at doubled exponents 0..D.
  std::vector<Integer> expand_doubled(std::size_t D) const;
  /// Coefficients at integer weights 0..T.
  std::vector<Integer> expand(std::size_t T) const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

 private:
  std::vector<Integer> num_;
  std::vector<int> den_;
};

HilbertSeries hilbert_free(const std::vector<HalfWeight>& weights);

/// Numerator times (1 + t^n).
HilbertSeries adjoin_square_root(const HilbertSeries& base, HalfWeight n);

/// (1 + (n-1)t) / (1-t)^2: the quotient of n+1 weight-one variables by the
/// rational-normal-curve type binomials.
HilbertSeries rational_normal_series(unsigned n);

/// Numerator over prod (1 - t^{w_i}) reproducing `seq` (indexed by doubled
/// exponent) up to its length. The fit is exact only if the generating
/// function really has that denominator; callers check with expand_doubled.
HilbertSeries fit_numerator(const std::vector<Integer>& seq, std::vector<int> denom_doubled);

/// The sequence k + [k/2] + 1 as quoted for the two-pair quotient, over (1-t)^2 (1-t^2)^2.
HilbertSeries quoted_pair_series(std::size_t horizon);

/// `(1 - t^2) / ((1-t)(1-t)(1-t))`; half-integer exponents print as `t^(3/2)`.
std::string to_string(const HilbertSeries& hs);

}  // namespace mfring
