#pragma once

// The unit group (Z/N)^x and Dirichlet characters on it.

#include <memory>
#include <string>
#include <vector>

#include "mfring/cyclo.hpp"

namespace mfring {

/// (Z/N)^x with a cyclic decomposition found by enumeration.
class UnitGroup {
 public:
  unsigned modulus() const noexcept { return modulus_; }
  const std::vector<unsigned>& generators() const noexcept { return gens_; }
  const std::vector<unsigned>& orders() const noexcept { return orders_; }
  unsigned order() const noexcept { return static_cast<unsigned>(elements_.size()); }
  const std::vector<unsigned>& elements() const noexcept { return elements_; }

  bool is_unit(long n) const;
  /// Exponents of `a` on the generators; `a` must be a unit residue.
  const std::vector<unsigned>& log(unsigned a) const { return logs_[a]; }
  unsigned reduce(long n) const;

 private:
  friend std::shared_ptr<const UnitGroup> unit_group(unsigned N);
  explicit UnitGroup(unsigned N);

  unsigned modulus_;
  std::vector<unsigned> gens_;
  std::vector<unsigned> orders_;
  std::vector<unsigned> elements_;
  std::vector<std::vector<unsigned>> logs_;  // indexed by residue; empty for non-units
};

/// Interned per modulus.
std::shared_ptr<const UnitGroup> unit_group(unsigned N);

/// Root-of-unity exponent: the value zeta_den^num.
struct RootValue {
  long num = 0;
  unsigned den = 1;
};

class DirichletCharacter {
 public:
  struct Assignment {
    long residue;
    RootValue value;
  };

  /// Trivial character mod N (the unit indicator 1_N).
  static DirichletCharacter trivial(unsigned N);

  /// The character with the given values; the residues must generate the group.
  static DirichletCharacter from_assignments(unsigned N, const std::vector<Assignment>& values);

  const UnitGroup& group() const noexcept { return *group_; }
  unsigned modulus() const noexcept { return group_->modulus(); }
  /// chi(g_i) = zeta_{orders[i]}^{exps[i]}.
  const std::vector<unsigned>& exps() const noexcept { return exps_; }
  /// Multiplicative order; every value lies in Q(zeta_order).
  unsigned order() const noexcept { return order_; }

  /// Exponent e with chi(n) = zeta_order^e, or -1 when gcd(n, N) > 1.
  long value_exponent(long n) const;
  CycloNum eval(const FieldCtx& ctx, long n) const;

  DirichletCharacter pow(long k) const;
  DirichletCharacter conjugate() const { return pow(-1); }
  /// Lifts to modulus M (N | M).
  DirichletCharacter lift(unsigned M) const;

  bool is_trivial() const noexcept { return order_ == 1; }
  /// chi(-1) as +1 or -1.
  int parity() const;
  unsigned conductor() const;
  bool is_primitive() const { return conductor() == modulus(); }

  const std::string& label() const noexcept { return label_; }
  DirichletCharacter with_label(std::string label) const;

  /// Same modulus and same values.
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);
  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);

 private:
  DirichletCharacter(std::shared_ptr<const UnitGroup> g, std::vector<unsigned> exps, std::string label);

  std::shared_ptr<const UnitGroup> group_;
  std::vector<unsigned> exps_;
  unsigned order_ = 1;
  std::vector<long> table_;  // exponent over order_, -1 off units
  std::string label_;
};

/// Product, lifting both factors to lcm of the moduli.
DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);

/// Built-in named characters: rho3, rho4, chi5, rho5, chi7, rho7, rho8, chi9,
/// chi11, rho11, chi13, rho13, chi16, chi17, rho17, chi19, rho19, chi23, rho23.
const std::vector<std::string>& named_character_names();
DirichletCharacter named_character(const std::string& name);

/// Names plus `conj(x)`, `pow(x,k)`, `mul(x,y)` and `one<m>` (trivial mod m).
DirichletCharacter parse_character(const std::string& text);

/// sum_{d | n} chi(d) d^power.
CycloNum twisted_sigma(const FieldCtx& ctx, unsigned power, const DirichletCharacter& chi, unsigned long n);
/// sum_{d | n} chi(n/d) d^power.
CycloNum twisted_sigma_cofactor(const FieldCtx& ctx, unsigned power, const DirichletCharacter& chi,
                                unsigned long n);
/// sum_{d | n} chi(d) psi(n/d) d^power.
CycloNum twisted_sigma_pair(const FieldCtx& ctx, unsigned power, const DirichletCharacter& chi,
                            const DirichletCharacter& psi, unsigned long n);

/// Ordinary sigma_power(n).
Integer sigma(unsigned power, unsigned long n);

std::vector<unsigned long> divisors(unsigned long n);

}  // namespace mfring
