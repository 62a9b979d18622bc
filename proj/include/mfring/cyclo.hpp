#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_L).
//
// Elements are stored as rational coordinates in the power basis
// 1, zeta, ..., zeta^(phi(L)-1), always reduced modulo the L-th cyclotomic
// polynomial, so equality is coordinatewise.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mfring {

using Rational = mpq_class;
using Integer = mpz_class;

/// a/b in lowest terms.
Rational frac(long a, long b);

/// Renders `a/b`, omitting `/1`.
std::string to_string(const Rational& r);

unsigned euler_phi(unsigned n);

/// Integer coefficients of Phi_n, ascending; monic of degree phi(n).
std::vector<Integer> cyclotomic_polynomial(unsigned n);

class FieldCtx {
 public:
  unsigned conductor() const noexcept { return conductor_; }
  std::size_t degree() const noexcept { return minpoly_.size() - 1; }
  const std::vector<Integer>& minpoly() const noexcept { return minpoly_; }

  /// zeta^j reduced into the power basis, 0 <= j < L.
  const std::vector<Rational>& power(unsigned j) const { return powers_[j]; }

 private:
  friend const FieldCtx& cyclo_context(unsigned L);
  explicit FieldCtx(unsigned L);

  unsigned conductor_;
  std::vector<Integer> minpoly_;
  std::vector<std::vector<Rational>> powers_;
};

/// Contexts are interned: one immutable instance per conductor for the
/// lifetime of the process, so references stay valid and comparable.
const FieldCtx& cyclo_context(unsigned L);

class CycloNum {
 public:
  explicit CycloNum(const FieldCtx& ctx);
  CycloNum(const FieldCtx& ctx, const Rational& r);
  CycloNum(const FieldCtx& ctx, long r) : CycloNum(ctx, Rational(r)) {}

  /// Reduces an arbitrary-length coordinate vector modulo Phi_L.
  static CycloNum from_poly(const FieldCtx& ctx, std::vector<Rational> coeffs);

  const FieldCtx& field() const noexcept { return *ctx_; }
  const std::vector<Rational>& coords() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Only valid when is_rational().
  const Rational& rational_part() const noexcept { return c_[0]; }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& r);

  /// this += a * b without a temporary for the product's reduction.
  void add_product(const CycloNum& a, const CycloNum& b);

  CycloNum inverse() const;
  CycloNum pow(long e) const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
  friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

 private:
  void check_same(const CycloNum& o) const;

  const FieldCtx* ctx_;
  std::vector<Rational> c_;
};

/// zeta_b^a as an element of Q(zeta_L); requires b | L.
CycloNum root_of_unity(const FieldCtx& ctx, long a, unsigned b);

/// Complex conjugation, zeta -> zeta^(L-1).
CycloNum conj(const CycloNum& x);

/// Coordinates (x, y) with value == x + y * zeta_n, for n in {3, 4, 6}.
std::pair<Rational, Rational> re_im(const CycloNum& value, unsigned n);

/// Canonical rendering: polynomial in `z<L>`, ascending exponents.
std::string to_string(const CycloNum& x);
std::ostream& operator<<(std::ostream& os, const CycloNum& x);

}  // namespace mfring
