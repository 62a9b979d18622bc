#include "mfring/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "mfring/error.hpp"

namespace mfring {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "skipped";
}

namespace {

json weight_json(HalfWeight w) {
  if (w.is_integral()) return w.floor_integer();
  return w.doubled / 2.0;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

json Report::to_json() const {
  return json{{"case", case_label},
              {"check", check},
              {"k_range", json::array({weight_json(k_lo), weight_json(k_hi)})},
              {"precision", precision},
              {"status", mfring::to_string(status)},
              {"details", details},
              {"elapsed_ms", elapsed_ms}};
}

std::string to_json_lines(const std::vector<Report>& reports) {
  std::string out;
  for (const auto& r : reports) out += r.to_json().dump() + "\n";
  return out;
}

std::string to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << std::left << std::setw(8) << to_string(r.status) << std::setw(14) << r.case_label << std::setw(12) << r.check
       << "k=" << to_string(r.k_lo) << ".." << to_string(r.k_hi) << "  prec=" << r.precision << "  " << r.elapsed_ms
       << "ms";
    if (r.details.contains("error")) os << "  error: " << r.details["error"].get<std::string>();
    if (r.details.contains("first_failure")) os << "  first failure: " << r.details["first_failure"].dump();
    if (r.details.contains("reason")) os << "  " << r.details["reason"].get<std::string>();
    os << "\n";
  }
  return os.str();
}

std::vector<kernels::Row> series_rows(const std::vector<QSeries>& series, std::size_t prec) {
  std::vector<kernels::Row> rows;
  rows.reserve(series.size());
  for (const auto& s : series) {
    const auto& c = s.coeffs();
    if (c.size() < prec) throw Error(Errc::PrecisionTooLow, "series known to O(q^" + std::to_string(c.size()) + ")");
    rows.emplace_back(c.begin(), c.begin() + static_cast<long>(prec));
  }
  return rows;
}

std::size_t matrix_rank(std::vector<kernels::Row> rows) { return kernels::echelon(std::move(rows)).rank; }

Verifier::Verifier(const Catalog& catalog, VerifyOptions options) : catalog_(&catalog), options_(options) {}

std::size_t Verifier::precision(const GroupSpec& g, HalfWeight w) const {
  const std::size_t bound = sturm_prec(g, w);
  if (options_.prec) {
    if (*options_.prec < bound) {
      throw Error(Errc::PrecisionTooLow, "precision " + std::to_string(*options_.prec) + " is below the Sturm bound " +
                                             std::to_string(bound) + " for " + g.to_string() + " at weight " +
                                             to_string(w));
    }
    return *options_.prec;
  }
  return bound + options_.guard;
}

Evaluator& Verifier::evaluator(unsigned L) {
  auto& slot = evaluators_[L];
  if (!slot) slot = std::make_unique<Evaluator>(*catalog_, cyclo_context(L));
  return *slot;
}

std::vector<std::string> Verifier::gen_names(const Presentation& p) const {
  std::vector<std::string> names;
  for (const auto& [name, w] : p.gens) names.push_back(name);
  return names;
}

std::vector<HalfWeight> Verifier::weights_of(const Presentation& p, const std::vector<std::string>& names) {
  std::vector<HalfWeight> out;
  for (const auto& name : names) {
    const auto w = catalog_->weight_of(parse_expr(name));
    if (!w) throw Error(Errc::Catalog, "case " + p.label + ": " + name + " has no weight");
    out.push_back(HalfWeight{*w});
  }
  return out;
}

std::vector<QSeries> Verifier::family(const Presentation& p, const std::vector<std::string>& names, std::size_t prec) {
  Evaluator& ev = evaluator(p.conductor);
  std::vector<QSeries> out;
  for (const auto& name : names) {
    const Expr e = parse_expr(name);
    if (catalog_->uses_quasi(e)) {
      throw Error(Errc::QuasiModular, name + " depends on E2, which is not modular");
    }
    out.push_back(ev.series(e, prec));
  }
  return out;
}

std::vector<HalfWeight> Verifier::weights_up_to(const Presentation& p, int kmax) const {
  std::vector<HalfWeight> out;
  const int step = p.group.half ? 1 : 2;
  for (int d = 0; d <= 2 * kmax; d += step) out.push_back(HalfWeight{d});
  return out;
}

std::size_t Verifier::span_rank(const Presentation& p, HalfWeight k, std::size_t prec) {
  const std::size_t bound = sturm_prec(p.group, k);
  if (prec < bound) {
    throw Error(Errc::PrecisionTooLow, "precision " + std::to_string(prec) + " is below the Sturm bound " +
                                           std::to_string(bound));
  }
  const auto weights = weights_of(p, p.span);
  const auto monomials = weighted_monomials(weights, k);
  if (monomials.empty()) return 0;
  MonomialEvaluator mono(family(p, p.span, prec));
  std::vector<QSeries> rows;
  for (const auto& e : monomials) rows.push_back(mono(e));
  return matrix_rank(series_rows(rows, prec));
}

long Verifier::vanishing_bound(const Presentation& via, HalfWeight kappa) {
  const auto key = std::make_pair(via.label, kappa.doubled);
  if (auto it = bound_cache_.find(key); it != bound_cache_.end()) return it->second;
  const HalfWeight doubled{2 * kappa.doubled};
  const std::size_t prec = precision(via.group, doubled);
  const auto monomials = weighted_monomials(weights_of(via, via.span), doubled);
  MonomialEvaluator mono(family(via, via.span, prec));
  std::vector<QSeries> rows;
  for (const auto& e : monomials) rows.push_back(mono(e));
  const auto ech = kernels::echelon(series_rows(rows, prec));
  const long expected = catalog_->dim(via.group.integral(), doubled);
  if (static_cast<long>(ech.rank) != expected) {
    throw Error(Errc::InvalidArgument, "case " + via.label + " spans rank " + std::to_string(ech.rank) + " at weight " +
                                           to_string(doubled) + ", expected " + std::to_string(expected) +
                                           "; vanishing orders are not certified");
  }
  const long d = ech.rank == 0 ? 0 : static_cast<long>(ech.pivot_cols.back()) + 1;
  const long bound = (d + 1) / 2;
  bound_cache_.emplace(key, bound);
  return bound;
}

std::optional<long> Verifier::dimension(const Presentation& p, HalfWeight k) {
  const GroupSpec base = p.group.integral();
  if (k.is_integral()) {
    if (!catalog_->admissible(base, k)) return std::nullopt;
    return catalog_->dim(base, k);
  }
  if (!p.group.half) return std::nullopt;
  const HalfRule* rule = catalog_->half_rule(p.group);
  if (!rule || !catalog_->admissible(base, HalfWeight{k.doubled - 1})) return std::nullopt;
  if (rule->kind != HalfRule::Kind::VanishingBound) return catalog_->dim(p.group, k);
  return vanishing_bound(catalog_->presentation(rule->via_case), k);
}

Report Verifier::verify_span(const Presentation& p) {
  Stopwatch clock;
  Report r{p.label, "span"};
  const int kmax = options_.kmax.value_or(p.kmax_span);
  r.k_hi = HalfWeight{2 * kmax};
  try {
    if (kmax <= 0) {
      r.details["reason"] = "no span horizon for this case";
      r.elapsed_ms = clock.ms();
      return r;
    }
    const auto weights = weights_of(p, p.span);
    struct Row {
      HalfWeight k;
      long dim;
      std::size_t prec;
    };
    std::vector<Row> todo;
    json skipped = json::array();
    for (HalfWeight k : weights_up_to(p, kmax)) {
      const auto dim = dimension(p, k);
      if (!dim) {
        skipped.push_back(weight_json(k));
        continue;
      }
      todo.push_back({k, *dim, precision(p.group, k)});
    }
    std::size_t pmax = 1;
    for (const auto& t : todo) pmax = std::max(pmax, t.prec);
    r.precision = pmax;
    MonomialEvaluator mono(family(p, p.span, pmax));
    json per = json::array();
    bool ok = true;
    for (const auto& t : todo) {
      const auto monomials = weighted_monomials(weights, t.k);
      std::vector<QSeries> rows;
      for (const auto& e : monomials) rows.push_back(mono(e));
      const std::size_t rank = rows.empty() ? 0 : matrix_rank(series_rows(rows, t.prec));
      json entry{{"k", weight_json(t.k)}, {"monomials", monomials.size()}, {"rank", rank}, {"dim", t.dim},
                 {"precision", t.prec}};
      per.push_back(entry);
      if (static_cast<long>(rank) != t.dim && ok) {
        ok = false;
        r.details["first_failure"] = entry;
      }
    }
    r.details["weights"] = per;
    if (!skipped.empty()) r.details["not_tabulated"] = skipped;
    r.status = ok ? Status::Pass : Status::Fail;
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details["error"] = e.what();
    r.details["error_code"] = errc_name(e.code());
  }
  r.elapsed_ms = clock.ms();
  return r;
}

Report Verifier::verify_relations(const Presentation& p) {
  Stopwatch clock;
  Report r{p.label, "relations"};
  try {
    if (p.relations_unknown) throw Error(Errc::RelationsUnknown, "relations of case " + p.label + " are not known");
    if (p.relations.empty()) {
      r.details["reason"] = "no relations";
      r.elapsed_ms = clock.ms();
      return r;
    }
    const FieldCtx& ctx = cyclo_context(p.conductor);
    const auto rels = presentation_relations(p, ctx);
    struct Job {
      const NamedPoly* rel;
      HalfWeight w;
      std::size_t prec;
    };
    std::vector<Job> jobs;
    std::size_t pmax = 1;
    int lo = 1 << 30, hi = 0;
    for (const auto& rel : rels) {
      const HalfWeight w{*rel.poly.weight()};
      const HalfWeight checked = w.is_integral() ? w : HalfWeight{2 * w.doubled};
      jobs.push_back({&rel, w, precision(p.group, checked)});
      pmax = std::max(pmax, jobs.back().prec);
      lo = std::min(lo, w.doubled);
      hi = std::max(hi, w.doubled);
    }
    r.k_lo = HalfWeight{lo};
    r.k_hi = HalfWeight{hi};
    r.precision = pmax;
    MonomialEvaluator mono(family(p, gen_names(p), pmax));
    json per = json::array();
    bool ok = true;
    for (const auto& job : jobs) {
      const QSeries value = mono.eval(job.rel->poly).truncate(job.prec);
      const auto order = vanishing_order(value);
      json entry{{"relation", job.rel->name}, {"weight", weight_json(job.w)}, {"precision", job.prec},
                 {"vanishes", !order.has_value()}};
      if (order) {
        entry["first_nonzero"] = *order;
        entry["coefficient"] = to_string(value[*order]);
        if (ok) r.details["first_failure"] = entry;
        ok = false;
      }
      per.push_back(entry);
    }
    r.details["relations"] = per;
    r.status = ok ? Status::Pass : Status::Fail;
  } catch (const Error& e) {
    r.status = e.code() == Errc::RelationsUnknown ? Status::Skipped : Status::Fail;
    r.details["error"] = e.what();
    r.details["error_code"] = errc_name(e.code());
  }
  r.elapsed_ms = clock.ms();
  return r;
}

Report Verifier::verify_kernel(const Presentation& p) {
  Stopwatch clock;
  Report r{p.label, "kernel"};
  const int kmax = options_.kmax.value_or(p.kmax_kernel);
  r.k_hi = HalfWeight{2 * kmax};
  try {
    if (p.relations_unknown) throw Error(Errc::RelationsUnknown, "relations of case " + p.label + " are not known");
    if (kmax <= 0 || p.relations.empty()) {
      r.details["reason"] = "no kernel horizon for this case";
      r.elapsed_ms = clock.ms();
      return r;
    }
    const FieldCtx& ctx = cyclo_context(p.conductor);
    const auto rels = presentation_relations(p, ctx);
    const auto names = gen_names(p);
    const auto weights = weights_of(p, names);
    const auto ks = weights_up_to(p, kmax);
    std::size_t pmax = 1;
    for (HalfWeight k : ks) pmax = std::max(pmax, precision(p.group, k));
    r.precision = pmax;
    MonomialEvaluator mono(family(p, names, pmax));
    json per = json::array();
    bool ok = true;
    for (HalfWeight k : ks) {
      const std::size_t prec = precision(p.group, k);
      const auto basis = weighted_monomials(weights, k);
      if (basis.empty()) continue;
      std::vector<QSeries> series;
      for (const auto& e : basis) series.push_back(mono(e));
      const auto rows = series_rows(series, prec);
      const std::size_t rank = matrix_rank(rows);
      const std::size_t dim_k = basis.size() - rank;

      std::vector<GenPoly> polys;
      for (const auto& rel : rels) polys.push_back(rel.poly);
      std::vector<kernels::Row> ideal = ideal_rows(polys, k);
      bool contained = true;
      for (const auto& v : ideal) {
        std::vector<CycloNum> acc(prec, CycloNum(ctx));
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (v[i].is_zero()) continue;
          for (std::size_t j = 0; j < prec; ++j)
            if (!rows[i][j].is_zero()) acc[j].add_product(v[i], rows[i][j]);
        }
        if (std::any_of(acc.begin(), acc.end(), [](const CycloNum& c) { return !c.is_zero(); })) {
          contained = false;
          break;
        }
      }
      const std::size_t multiples = ideal.size();
      const std::size_t dim_i = ideal.empty() ? 0 : matrix_rank(std::move(ideal));
      const auto expected = dimension(p, k);
      json entry{{"k", weight_json(k)},   {"monomials", basis.size()}, {"rank", rank},
                 {"multiples", multiples}, {"dim_kernel", dim_k},         {"dim_ideal", dim_i},
                 {"contained", contained}, {"precision", prec}};
      bool good = contained && dim_i == dim_k;
      if (expected) {
        entry["dim"] = *expected;
        good = good && static_cast<long>(rank) == *expected;
      }
      per.push_back(entry);
      if (!good && ok) {
        ok = false;
        r.details["first_failure"] = entry;
      }
    }
    r.details["weights"] = per;
    r.status = ok ? Status::Pass : Status::Fail;
  } catch (const Error& e) {
    r.status = e.code() == Errc::RelationsUnknown ? Status::Skipped : Status::Fail;
    r.details["error"] = e.what();
    r.details["error_code"] = errc_name(e.code());
  }
  r.elapsed_ms = clock.ms();
  return r;
}

Report Verifier::verify_identity(const Identity& id) {
  Stopwatch clock;
  Report r{id.name, "identity", id.weight, id.weight};
  try {
    const HalfWeight checked = id.weight.is_integral() ? id.weight : HalfWeight{2 * id.weight.doubled};
    r.precision = precision(id.group, checked);
    const QSeries value = evaluator(id.conductor).series(id.expr, r.precision);
    const auto order = vanishing_order(value);
    r.details["group"] = id.group.to_string();
    if (order) {
      r.details["first_failure"] = json{{"index", *order}, {"coefficient", to_string(value[*order])}};
      r.status = Status::Fail;
    } else {
      r.status = Status::Pass;
    }
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details["error"] = e.what();
    r.details["error_code"] = errc_name(e.code());
  }
  r.elapsed_ms = clock.ms();
  return r;
}

Report Verifier::verify_integrality(const std::string& form_name) {
  Stopwatch clock;
  Report r{form_name, "integrality"};
  try {
    const FormDef& f = catalog_->form(form_name);
    r.k_lo = r.k_hi = f.weight;
    r.precision = options_.integrality_prec;
    const QSeries s = evaluator(f.conductor).form(form_name, r.precision);
    std::optional<std::size_t> bad;
    std::string why;
    if (!s[0].is_zero()) {
      bad = 0;
      why = "constant term is not 0";
    } else if (!s[1].is_one()) {
      bad = 1;
      why = "q coefficient is not 1";
    } else {
      for (std::size_t i = 2; i < s.prec() && !bad; ++i) {
        if (!s[i].is_rational() || s[i].rational_part().get_den() != 1) {
          bad = i;
          why = "coefficient is not a rational integer";
        }
      }
    }
    for (std::size_t i = 1; i < s.prec(); ++i) {
      if (!s[i].is_rational() || s[i].rational_part().get_den() != 1) {
        r.details["first_non_integer"] = json{{"index", i}, {"coefficient", to_string(s[i])}};
        break;
      }
    }
    if (bad) {
      r.details["first_failure"] = json{{"index", *bad}, {"coefficient", to_string(s[*bad])}, {"reason", why}};
      r.status = Status::Fail;
    } else {
      r.status = Status::Pass;
    }
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details["error"] = e.what();
    r.details["error_code"] = errc_name(e.code());
  }
  r.elapsed_ms = clock.ms();
  return r;
}

Report Verifier::verify_hilbert(const Presentation& p) {
  Stopwatch clock;
  Report r{p.label, "hilbert"};
  const std::size_t T = options_.hilbert_horizon;
  r.k_hi = HalfWeight{static_cast<int>(2 * T)};
  try {
    if (!p.hilbert) {
      r.details["reason"] = "no claimed Hilbert series";
      r.elapsed_ms = clock.ms();
      return r;
    }
    r.details["series"] = to_string(*p.hilbert);
    const auto coeffs = p.hilbert->expand_doubled(2 * T);
    const HalfRule* rule = p.group.half ? catalog_->half_rule(p.group) : nullptr;
    const int bound_limit = 2 * std::max(p.kmax_span, options_.kmax.value_or(0));
    json per = json::array();
    json skipped = json::array();
    bool ok = true;
    for (std::size_t m = 0; m <= 2 * T; ++m) {
      const HalfWeight w{static_cast<int>(m)};
      std::optional<long> expected;
      if (m == 0) {
        expected = 1;
      } else if (!w.is_integral() && !p.group.half) {
        expected = 0;
      } else if (!w.is_integral() && rule && rule->kind == HalfRule::Kind::VanishingBound && w.doubled > bound_limit) {
        skipped.push_back(weight_json(w));
        continue;
      } else {
        expected = dimension(p, w);
        const DimRow* row = catalog_->dim_row(p.group.integral());
        if (!expected && w.is_integral() && row && row->domain == DimRow::Domain::Even && w.floor_integer() % 2 == 1) {
          expected = 0;
        }
      }
      if (!expected) {
        skipped.push_back(weight_json(w));
        continue;
      }
      const bool match = coeffs[m] == *expected;
      if (!match || w.is_integral() || p.group.half) per.push_back(json::array({weight_json(w), coeffs[m].get_si(), *expected}));
      if (!match && ok) {
        ok = false;
        r.details["first_failure"] = json{{"k", weight_json(w)}, {"series", coeffs[m].get_si()}, {"dim", *expected}};
      }
    }
    r.details["compared"] = per;
    if (!skipped.empty()) r.details["not_compared"] = skipped;
    r.status = ok ? Status::Pass : Status::Fail;
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details["error"] = e.what();
    r.details["error_code"] = errc_name(e.code());
  }
  r.elapsed_ms = clock.ms();
  return r;
}

std::vector<Report> Verifier::full_report(const std::vector<std::string>& cases, const std::vector<std::string>& checks) {
  auto wants = [&](const std::string& c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };
  auto selected = [&](const std::string& label) {
    return cases.empty() || std::find(cases.begin(), cases.end(), label) != cases.end();
  };
  std::vector<Report> out;
  if (wants("identity")) {
    for (const auto& id : catalog_->identities())
      if (selected(id.name)) out.push_back(verify_identity(id));
  }
  if (wants("integrality")) {
    for (const auto& name : catalog_->integral_forms())
      if (selected(name)) out.push_back(verify_integrality(name));
  }
  for (const auto& p : catalog_->presentations()) {
    if (!selected(p.label)) continue;
    if (wants("span")) out.push_back(verify_span(p));
    if (wants("relations")) out.push_back(verify_relations(p));
    if (wants("kernel")) out.push_back(verify_kernel(p));
    if (wants("hilbert")) out.push_back(verify_hilbert(p));
  }
  return out;
}

std::vector<kernels::Row> ideal_rows(const std::vector<GenPoly>& relations, HalfWeight k) {
  std::vector<kernels::Row> rows;
  if (relations.empty()) return rows;
  const auto& weights = relations.front().weights();
  const FieldCtx& ctx = relations.front().field();
  const auto basis = weighted_monomials(weights, k);
  for (const auto& rel : relations) {
    const auto rw = rel.weight();
    if (!rw || *rw > k.doubled) continue;
    for (const auto& m : weighted_monomials(weights, HalfWeight{k.doubled - *rw}))
      rows.push_back((GenPoly::monomial(ctx, weights, m) * rel).coordinates(basis));
  }
  return rows;
}

std::size_t quotient_dim(const std::vector<GenPoly>& relations, const std::vector<HalfWeight>& weights, HalfWeight k) {
  const std::size_t monomials = weighted_monomials(weights, k).size();
  auto rows = ideal_rows(relations, k);
  return monomials - (rows.empty() ? 0 : matrix_rank(std::move(rows)));
}

Report hilbert_equal_to_dims(const Catalog& catalog, const HilbertSeries& hs, const GroupSpec& g, std::size_t T) {
  Stopwatch clock;
  Report r{g.to_string(), "hilbert", HalfWeight{0}, HalfWeight{static_cast<int>(2 * T)}};
  const DimRow* row = catalog.dim_row(g.integral());
  if (!row) throw Error(Errc::OutOfTable, "no dimension row for " + g.to_string());
  const HalfRule* rule = g.half ? catalog.half_rule(g) : nullptr;
  const auto coeffs = hs.expand_doubled(2 * T);
  json per = json::array();
  json skipped = json::array();
  bool ok = true;
  for (std::size_t m = 0; m <= 2 * T; ++m) {
    const HalfWeight w{static_cast<int>(m)};
    std::optional<long> expected;
    if (m == 0) {
      expected = 1;
    } else if (!w.is_integral()) {
      if (!g.half) expected = 0;
      else if (rule && rule->kind != HalfRule::Kind::VanishingBound && catalog.admissible(g.integral(), HalfWeight{w.doubled - 1}))
        expected = catalog.dim(g, w);
    } else if (catalog.admissible(g.integral(), w)) {
      expected = catalog.dim(g.integral(), w);
    } else if (row->domain == DimRow::Domain::Even && w.floor_integer() % 2 == 1) {
      expected = 0;
    }
    if (!expected) {
      skipped.push_back(weight_json(w));
      continue;
    }
    if (coeffs[m] != *expected || w.is_integral() || g.half)
      per.push_back(json::array({weight_json(w), coeffs[m].get_si(), *expected}));
    if (coeffs[m] != *expected && ok) {
      ok = false;
      r.details["first_failure"] = json{{"k", weight_json(w)}, {"series", coeffs[m].get_si()}, {"dim", *expected}};
    }
  }
  r.details["series"] = to_string(hs);
  r.details["compared"] = per;
  if (!skipped.empty()) r.details["not_compared"] = skipped;
  r.status = ok ? Status::Pass : Status::Fail;
  r.elapsed_ms = clock.ms();
  return r;
}

}  // namespace mfring
