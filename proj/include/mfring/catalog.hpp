#pragma once

// Declarative catalog: groups with dimension rows, named form definitions,
// identities, and ring presentations, loaded from a JSON file.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mfring/expr.hpp"
#include "mfring/hilbert.hpp"
#include "mfring/qseries.hpp"

namespace mfring {

/// Gamma(N, G): matrices in Gamma_0(N) with d mod N in the subgroup G.
///   full, gamma0:N, gamma1:N, gammaH:N:[g1,g2,...], optional suffix :half
struct GroupSpec {
  enum class Kind { Full, Gamma0, GammaH };

  Kind kind = Kind::Full;
  unsigned level = 1;
  std::vector<unsigned> gens;  // GammaH only
  bool half = false;

  /// Sorted elements of the subgroup of (Z/N)^x.
  std::vector<unsigned> subgroup() const;
  bool contains_minus_one() const;
  /// Canonical identity of the group, ignoring the half flag.
  std::string key() const;
  std::string to_string() const;
  GroupSpec integral() const;
};

GroupSpec parse_group(const std::string& text);

/// Index of the image in PSL_2(Z): psi(N) [(Z/N)^x : <G,-1>].
unsigned long group_index(const GroupSpec& g);

/// floor(k * index / 12) + 2 for integral weight k; for half-integral
/// weights the bound of the doubled weight, halved and rounded up.
std::size_t sturm_prec(const GroupSpec& g, HalfWeight w);

/// Evaluates a dimension formula in k: integers, k, + - * %, [a/b] floor
/// division and (a==b) as 0/1.
long eval_dim_formula(const std::string& formula, long k);

struct DimRow {
  enum class Domain { Even, NonNegative, Positive };

  GroupSpec group;
  Domain domain = Domain::NonNegative;
  std::string formula;
  std::map<std::string, std::string> decomposition;  // metadata only
};

/// Dimension rule for half-integral weights k + 1/2.
struct HalfRule {
  enum class Kind { Same, PlusOne, VanishingBound };

  GroupSpec group;
  Kind kind = Kind::Same;
  std::string via_case;  // VanishingBound: case whose span gives M_{2 kappa}
};

struct FormDef {
  std::string name;
  HalfWeight weight;
  std::string group;
  std::string character;
  std::string expr_text;
  Expr expr;
  unsigned conductor = 1;  // root-of-unity order the coefficients need
  bool quasi = false;      // depends on E2
};

struct Identity {
  std::string name;
  GroupSpec group;
  HalfWeight weight;
  std::string expr_text;
  Expr expr;
  unsigned conductor = 1;
};

struct Relation {
  std::string name;
  std::string text;
};

struct Presentation {
  std::string label;
  GroupSpec group;
  unsigned conductor = 1;
  std::vector<std::string> span;  // spanning family; defaults to gens
  std::vector<std::pair<std::string, HalfWeight>> gens;
  std::map<std::string, std::string> conj;     // generator -> conjugate generator
  std::map<std::string, std::string> aliases;  // name -> polynomial in the generators
  std::vector<Relation> relations;
  bool relations_unknown = false;
  std::optional<HilbertSeries> hilbert;
  std::string base;  // label of the presentation this one extends
  int kmax_span = 4;    // doubled-weight horizon is 2 * kmax
  int kmax_kernel = 0;  // 0: no kernel check
  std::string note;
};

class Catalog {
 public:
  static Catalog load(const std::string& path);
  static Catalog from_json(const std::string& text);
  /// Path baked in at build time.
  static std::string default_path();

  const std::vector<DimRow>& dim_rows() const noexcept { return dims_; }
  const std::vector<HalfRule>& half_rules() const noexcept { return half_; }
  const std::map<std::string, FormDef>& forms() const noexcept { return forms_; }
  const std::vector<Identity>& identities() const noexcept { return identities_; }
  const std::vector<Presentation>& presentations() const noexcept { return presentations_; }
  /// Forms claimed to lie in q + Z[[q]]q^2.
  const std::vector<std::string>& integral_forms() const noexcept { return integral_; }

  const FormDef& form(const std::string& name) const;
  const Identity& identity(const std::string& name) const;
  const Presentation& presentation(const std::string& label) const;
  const DimRow* dim_row(const GroupSpec& g) const;
  const HalfRule* half_rule(const GroupSpec& g) const;

  /// Tabulated dimension. Vanishing-bound rules are computed by the verifier and
  /// raise OutOfTable here.
  long dim(const GroupSpec& g, HalfWeight w) const;
  bool admissible(const GroupSpec& g, HalfWeight w) const;

  /// Doubled weight of an expression; nullopt for a scalar.
  std::optional<int> weight_of(const Expr& e) const;
  unsigned conductor_of(const Expr& e) const;
  bool uses_quasi(const Expr& e) const;

 private:
  void finish();

  std::vector<DimRow> dims_;
  std::vector<HalfRule> half_;
  std::map<std::string, FormDef> forms_;
  std::vector<Identity> identities_;
  std::vector<Presentation> presentations_;
  std::vector<std::string> integral_;
};

/// Evaluates forms and expressions over one coefficient field, caching
/// named forms at the largest precision requested so far.
class Evaluator {
 public:
  using Value = std::variant<CycloNum, QSeries>;

  Evaluator(const Catalog& catalog, const FieldCtx& ctx) : catalog_(&catalog), ctx_(&ctx) {}

  const FieldCtx& field() const noexcept { return *ctx_; }
  const Catalog& catalog() const noexcept { return *catalog_; }

  QSeries form(const std::string& name, std::size_t prec);
  QSeries series(const Expr& e, std::size_t prec);
  Value eval(const Expr& e, std::size_t prec);

 private:
  QSeries atom(const Atom& a, std::size_t prec);

  const Catalog* catalog_;
  const FieldCtx* ctx_;
  std::map<std::string, QSeries> cache_;
};

/// Evaluates a name or prefix expression, choosing the field from the
/// roots of unity it needs.
QSeries lookup_form(const Catalog& catalog, const std::string& name_or_expr, std::size_t prec);

}  // namespace mfring
