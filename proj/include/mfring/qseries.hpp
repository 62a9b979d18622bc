#pragma once

// Truncated q-expansions sum_{i < prec} c_i q^i with coefficients in Q(zeta_L).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mfring/cyclo.hpp"

namespace mfring {

/// Weight kappa in (1/2)Z, stored as 2*kappa.
struct HalfWeight {
  int doubled = 0;

  static constexpr HalfWeight integer(int k) { return HalfWeight{2 * k}; }
  constexpr bool is_integral() const { return doubled % 2 == 0; }
  constexpr int floor_integer() const { return doubled / 2; }

  friend constexpr bool operator==(HalfWeight a, HalfWeight b) { return a.doubled == b.doubled; }
  friend constexpr auto operator<=>(HalfWeight a, HalfWeight b) { return a.doubled <=> b.doubled; }
  friend constexpr HalfWeight operator+(HalfWeight a, HalfWeight b) { return {a.doubled + b.doubled}; }
};

/// "3" or "5/2".
std::string to_string(HalfWeight w);

class QSeries {
 public:
  /// Zero series.
  QSeries(const FieldCtx& ctx, std::size_t prec);
  explicit QSeries(std::vector<CycloNum> coeffs);

  static QSeries constant(const CycloNum& c, std::size_t prec);
  static QSeries one(const FieldCtx& ctx, std::size_t prec);

  const FieldCtx& field() const noexcept { return *ctx_; }
  std::size_t prec() const noexcept { return c_.size(); }
  const CycloNum& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<CycloNum>& coeffs() const noexcept { return c_; }

  QSeries truncate(std::size_t prec) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator-(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const CycloNum& c, const QSeries& f);
  friend QSeries operator*(const Rational& c, const QSeries& f);

  QSeries pow(unsigned e) const;

  /// Identical coefficients and precision.
  friend bool operator==(const QSeries& f, const QSeries& g);

 private:
  const FieldCtx* ctx_;
  std::vector<CycloNum> c_;
};

/// q -> q^h. Output precision h*(prec-1)+1.
QSeries v_operator(const QSeries& f, unsigned h);

/// (1/a)(f - f^<h>) for f = 1 + a q + O(q^2), a != 0. Precision of f.
QSeries lowered(const QSeries& f, unsigned h);

QSeries conj_series(const QSeries& f);

/// Index of the first nonzero coefficient; nullopt when zero to precision.
std::optional<std::size_t> vanishing_order(const QSeries& f);

/// Serial product, the reference for the parallel kernel behind operator*.
QSeries multiply_serial(const QSeries& f, const QSeries& g);

/// `c0 + c1*q + ... + O(q^P)`.
std::string to_string(const QSeries& f);
std::ostream& operator<<(std::ostream& os, const QSeries& f);

}  // namespace mfring
