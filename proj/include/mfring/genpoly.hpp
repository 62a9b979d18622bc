#pragma once

// Polynomials in the generators of a presentation, with cyclotomic coefficients.
// Text syntax: + - * / ^n, parentheses, integers, zeta(a/b), conj(...),
// generator names, aliases and earlier relation names.

#include <map>
#include <string>
#include <vector>

#include "mfring/catalog.hpp"

namespace mfring {

using Exponents = std::vector<unsigned>;

class GenPoly {
 public:
  GenPoly(const FieldCtx& ctx, std::vector<HalfWeight> weights);

  static GenPoly constant(const FieldCtx& ctx, std::vector<HalfWeight> weights, const CycloNum& c);
  static GenPoly variable(const FieldCtx& ctx, std::vector<HalfWeight> weights, std::size_t i);
  static GenPoly monomial(const FieldCtx& ctx, std::vector<HalfWeight> weights, const Exponents& e);

  const FieldCtx& field() const noexcept { return *ctx_; }
  const std::vector<HalfWeight>& weights() const noexcept { return weights_; }
  const std::map<Exponents, CycloNum>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Doubled weight shared by all terms; throws Catalog if mixed, nullopt when zero.
  std::optional<int> weight() const;

  GenPoly operator-() const;
  friend GenPoly operator+(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator-(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const CycloNum& c, const GenPoly& a);
  friend bool operator==(const GenPoly& a, const GenPoly& b) = default;

  GenPoly pow(unsigned e) const;

  /// Conjugates coefficients and permutes variables by `perm`.
  GenPoly conjugate(const std::vector<std::size_t>& perm) const;

  /// Coefficients over the given monomial basis; throws if a term is missing from it.
  std::vector<CycloNum> coordinates(const std::vector<Exponents>& basis) const;

 private:
  void add_term(const Exponents& e, const CycloNum& c);

  const FieldCtx* ctx_;
  std::vector<HalfWeight> weights_;
  std::map<Exponents, CycloNum> terms_;
};

/// Exponent vectors e with sum e_i w_i = k, lexicographically increasing.
std::vector<Exponents> weighted_monomials(const std::vector<HalfWeight>& weights, HalfWeight k);

/// Doubled weight of a monomial.
int monomial_weight(const std::vector<HalfWeight>& weights, const Exponents& e);

/// Parses a polynomial over the generators of `p`. `named` supplies earlier
/// relations by name.
GenPoly parse_genpoly(const std::string& text, const Presentation& p, const FieldCtx& ctx,
                      const std::map<std::string, GenPoly>& named = {});

struct NamedPoly {
  std::string name;
  GenPoly poly;
};

/// All relations of a presentation, parsed in order; each must be homogeneous.
std::vector<NamedPoly> presentation_relations(const Presentation& p, const FieldCtx& ctx);

/// Products of generator series, memoised over exponent vectors.
class MonomialEvaluator {
 public:
  MonomialEvaluator(std::vector<QSeries> gens);

  std::size_t prec() const noexcept { return prec_; }
  const QSeries& operator()(const Exponents& e);
  QSeries eval(const GenPoly& p);

 private:
  std::vector<QSeries> gens_;
  std::size_t prec_;
  std::map<Exponents, QSeries> cache_;
};

}  // namespace mfring
