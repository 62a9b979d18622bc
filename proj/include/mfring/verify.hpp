#pragma once

// Verification engine: span ranks against dimensions, relation vanishing,
// degree-wise kernel exhaustion, identities, integrality and Hilbert series.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mfring/catalog.hpp"
#include "mfring/genpoly.hpp"
#include "mfring/kernels.hpp"

namespace mfring {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct Report {
  std::string case_label;
  std::string check;
  HalfWeight k_lo{0};
  HalfWeight k_hi{0};
  std::size_t precision = 0;
  Status status = Status::Skipped;
  nlohmann::json details = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;

  bool passed() const noexcept { return status == Status::Pass; }
  nlohmann::json to_json() const;
};

/// One JSON object per line.
std::string to_json_lines(const std::vector<Report>& reports);
/// Aligned human-readable lines.
std::string to_text(const std::vector<Report>& reports);

struct VerifyOptions {
  std::size_t guard = 8;           // extra coefficients past the Sturm bound
  std::optional<std::size_t> prec;  // fixed precision instead of Sturm + guard
  std::optional<int> kmax;          // overrides the per-case horizon
  std::size_t hilbert_horizon = 20;
  std::size_t integrality_prec = 100;
};

class Verifier {
 public:
  explicit Verifier(const Catalog& catalog, VerifyOptions options = {});

  const Catalog& catalog() const noexcept { return *catalog_; }
  const VerifyOptions& options() const noexcept { return options_; }

  /// Sturm bound plus guard (or the fixed override, which must not be below the bound).
  std::size_t precision(const GroupSpec& g, HalfWeight w) const;

  /// Rank of the weight-k monomials in the spanning family at `prec`.
  std::size_t span_rank(const Presentation& p, HalfWeight k, std::size_t prec);
  /// Dimension from the catalog, or from the vanishing-order bound for Vanishing-bound rules.
  std::optional<long> dimension(const Presentation& p, HalfWeight k);
  /// Bound [(d+1)/2] where d is one past the largest vanishing order in the
  /// doubled-weight space spanned by `via`.
  long vanishing_bound(const Presentation& via, HalfWeight kappa);

  Report verify_span(const Presentation& p);
  Report verify_relations(const Presentation& p);
  Report verify_kernel(const Presentation& p);
  Report verify_identity(const Identity& id);
  Report verify_integrality(const std::string& form_name);
  Report verify_hilbert(const Presentation& p);

  /// Weights checked by span and kernel checks, increasing.
  std::vector<HalfWeight> weights_up_to(const Presentation& p, int kmax) const;

  std::vector<Report> full_report(const std::vector<std::string>& cases, const std::vector<std::string>& checks);

 private:
  Evaluator& evaluator(unsigned L);
  std::vector<QSeries> family(const Presentation& p, const std::vector<std::string>& names, std::size_t prec);
  std::vector<std::string> gen_names(const Presentation& p) const;
  std::vector<HalfWeight> weights_of(const Presentation& p, const std::vector<std::string>& names);

  const Catalog* catalog_;
  VerifyOptions options_;
  std::map<unsigned, std::unique_ptr<Evaluator>> evaluators_;
  std::map<std::pair<std::string, int>, long> bound_cache_;
};

/// Rank of rows (parallel kernel).
std::size_t matrix_rank(std::vector<kernels::Row> rows);

/// Rows of series truncated to `prec`.
std::vector<kernels::Row> series_rows(const std::vector<QSeries>& series, std::size_t prec);

/// Rows of m * r in the weight-k monomial basis, for every relation r and
/// monomial m of complementary weight. All relations share one variable list.
std::vector<kernels::Row> ideal_rows(const std::vector<GenPoly>& relations, HalfWeight k);

/// Dimension of the weight-k part of the quotient by the ideal the relations generate.
std::size_t quotient_dim(const std::vector<GenPoly>& relations, const std::vector<HalfWeight>& weights, HalfWeight k);

/// Compares the expansion of `hs` with the tabulated dimensions of `g` up to
/// weight T. Weights the table does not cover are listed as skipped; odd
/// weights of an even-weight row must have coefficient 0.
Report hilbert_equal_to_dims(const Catalog& catalog, const HilbertSeries& hs, const GroupSpec& g, std::size_t T);

}  // namespace mfring
