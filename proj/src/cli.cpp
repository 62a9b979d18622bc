#include "mfring/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <optional>

#include "mfring/catalog.hpp"
#include "mfring/error.hpp"
#include "mfring/verify.hpp"

namespace mfring {

namespace {

using nlohmann::json;

struct Config {
  std::string catalog_path = Catalog::default_path();
  std::string output = "text";
  std::optional<std::size_t> prec;
  std::optional<int> kmax;
  std::size_t horizon = 20;
  std::vector<std::string> cases;
  std::string group;
  std::string name;
  std::string target;
  bool all = false;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::UnknownForm:
    case Errc::UnknownIdentity:
    case Errc::UnknownCase:
    case Errc::UnknownGroup:
      return kExitUnknown;
    default:
      return kExitConfig;
  }
}

json weight_json(HalfWeight w) {
  if (w.is_integral()) return w.floor_integer();
  return w.doubled / 2.0;
}

int cmd_qexp(const Config& cfg, const Catalog& cat, std::ostream& out) {
  const std::size_t prec = cfg.prec.value_or(20);
  const QSeries s = lookup_form(cat, cfg.name, prec);
  if (cfg.output == "json") {
    json coeffs = json::array();
    for (std::size_t i = 0; i < s.prec(); ++i) coeffs.push_back(to_string(s[i]));
    out << json{{"name", cfg.name}, {"precision", prec}, {"coefficients", coeffs}}.dump() << "\n";
  } else {
    out << to_string(s) << "\n";
  }
  return kExitPass;
}

int cmd_dims(const Config& cfg, const Catalog& cat, std::ostream& out) {
  if (cfg.group.empty()) throw Error(Errc::InvalidArgument, "dims needs --group");
  const GroupSpec g = parse_group(cfg.group);
  if (!cat.dim_row(g.integral())) throw Error(Errc::UnknownGroup, "no dimension row for " + g.to_string());
  const int kmax = cfg.kmax.value_or(12);
  json rows = json::array();
  for (int d = 0; d <= 2 * kmax; ++d) {
    const HalfWeight w{d};
    if (!w.is_integral() && !g.half) continue;
    long dim = 0;
    try {
      if (!w.is_integral() && !cat.admissible(g.integral(), HalfWeight{d - 1})) continue;
      if (w.is_integral() && !cat.admissible(g.integral(), w)) continue;
      dim = cat.dim(w.is_integral() ? g.integral() : g, w);
    } catch (const Error& e) {
      if (e.code() == Errc::OutOfTable) continue;
      throw;
    }
    rows.push_back(json{{"k", weight_json(w)}, {"dim", dim}});
  }
  if (cfg.output == "json") {
    out << json{{"group", g.to_string()}, {"dims", rows}}.dump() << "\n";
  } else {
    for (const auto& r : rows) out << "k=" << r["k"].dump() << "  dim=" << r["dim"] << "\n";
  }
  return kExitPass;
}

int cmd_hilbert(const Config& cfg, const Catalog& cat, std::ostream& out) {
  if (cfg.cases.size() != 1) throw Error(Errc::InvalidArgument, "hilbert needs exactly one --case");
  const Presentation& p = cat.presentation(cfg.cases.front());
  if (!p.hilbert) throw Error(Errc::InvalidArgument, "case " + p.label + " has no claimed Hilbert series");
  VerifyOptions opts;
  opts.hilbert_horizon = cfg.horizon;
  Verifier v(cat, opts);
  const Report r = v.verify_hilbert(p);
  if (cfg.output == "json") {
    out << r.to_json().dump() << "\n";
  } else {
    out << "case " << p.label << ": " << to_string(*p.hilbert) << "\n";
    for (const auto& row : r.details["compared"]) {
      const bool match = row[1] == row[2];
      out << "k=" << row[0].dump() << "  series=" << row[1] << "  dim=" << row[2] << (match ? "" : "  MISMATCH") << "\n";
    }
    if (r.details.contains("not_compared")) out << "not compared: " << r.details["not_compared"].dump() << "\n";
    out << to_string(r.status) << "\n";
  }
  return r.passed() ? kExitPass : kExitFail;
}

std::vector<std::string> checks_for(const std::string& target) {
  if (target == "all") return {"identity", "integrality", "span", "relations", "kernel", "hilbert"};
  if (target == "presentation") return {"span", "relations", "kernel", "hilbert"};
  if (target == "identity" || target == "integrality" || target == "span" || target == "relations" ||
      target == "kernel" || target == "hilbert")
    return {target};
  throw Error(Errc::InvalidArgument, "unknown verify target '" + target + "'");
}

int cmd_verify(const Config& cfg, const Catalog& cat, std::ostream& out) {
  const std::string target = cfg.all ? "all" : (cfg.target.empty() ? "all" : cfg.target);
  const auto checks = checks_for(target);
  for (const auto& label : cfg.cases) {
    const bool is_case = std::any_of(cat.presentations().begin(), cat.presentations().end(),
                                     [&](const Presentation& p) { return p.label == label; });
    const bool is_identity = std::any_of(cat.identities().begin(), cat.identities().end(),
                                         [&](const Identity& id) { return id.name == label; });
    const bool is_integral = std::find(cat.integral_forms().begin(), cat.integral_forms().end(), label) !=
                             cat.integral_forms().end();
    if (!is_case && !is_identity && !is_integral) throw Error(Errc::UnknownCase, "unknown case '" + label + "'");
  }
  if (cfg.kmax && *cfg.kmax < 0) throw Error(Errc::InvalidArgument, "--kmax must be nonnegative");
  VerifyOptions opts;
  opts.prec = cfg.prec;
  opts.kmax = cfg.kmax;
  opts.hilbert_horizon = cfg.horizon;
  Verifier v(cat, opts);
  const auto reports = v.full_report(cfg.cases, checks);
  out << (cfg.output == "json" ? to_json_lines(reports) : to_text(reports));
  for (const auto& r : reports) {
    if (r.details.contains("error_code") && r.details["error_code"] == errc_name(Errc::PrecisionTooLow))
      return kExitConfig;
  }
  const bool ok = std::none_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::Fail; });
  return ok ? kExitPass : kExitFail;
}

int cmd_catalog_list(const Config& cfg, const Catalog& cat, std::ostream& out) {
  json groups = json::array();
  for (const auto& row : cat.dim_rows()) groups.push_back(json{{"group", row.group.to_string()}, {"formula", row.formula}});
  json forms = json::array();
  for (const auto& [name, f] : cat.forms()) forms.push_back(json{{"name", name}, {"weight", weight_json(f.weight)}});
  json ids = json::array();
  for (const auto& id : cat.identities()) ids.push_back(id.name);
  json cases = json::array();
  for (const auto& p : cat.presentations()) {
    json gens = json::array();
    for (const auto& [name, w] : p.gens) gens.push_back(name + ":" + to_string(w));
    cases.push_back(json{{"case", p.label}, {"group", p.group.to_string()}, {"gens", gens}});
  }
  if (cfg.output == "json") {
    out << json{{"groups", groups}, {"forms", forms}, {"identities", ids}, {"presentations", cases}}.dump() << "\n";
    return kExitPass;
  }
  out << "groups:\n";
  for (const auto& g : groups) out << "  " << g["group"].get<std::string>() << "  dim = " << g["formula"].get<std::string>() << "\n";
  out << "forms:\n";
  for (const auto& f : forms) out << "  " << f["name"].get<std::string>() << "  weight " << f["weight"].dump() << "\n";
  out << "identities:\n";
  for (const auto& i : ids) out << "  " << i.get<std::string>() << "\n";
  out << "presentations:\n";
  for (const auto& c : cases) {
    out << "  " << c["case"].get<std::string>() << "  " << c["group"].get<std::string>() << "  [";
    bool first = true;
    for (const auto& g : c["gens"]) {
      out << (first ? "" : ", ") << g.get<std::string>();
      first = false;
    }
    out << "]\n";
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact q-expansions, dimensions and ring presentations of modular forms"};
  app.require_subcommand(1);
  app.add_option("--catalog", cfg.catalog_path, "catalog JSON file");
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* qexp = app.add_subcommand("qexp", "print a q-expansion");
  qexp->add_option("name", cfg.name, "form name or expression")->required();
  qexp->add_option("--prec", cfg.prec, "number of coefficients");

  auto* dims = app.add_subcommand("dims", "print the dimension table of a group");
  dims->add_option("--group", cfg.group, "full, gamma0:N, gamma1:N, gammaH:N:[..], with :half")->required();
  dims->add_option("--kmax", cfg.kmax, "largest weight");

  auto* hilbert = app.add_subcommand("hilbert", "expand a claimed Hilbert series against dimensions");
  hilbert->add_option("--case", cfg.cases, "presentation label")->required();
  hilbert->add_option("--horizon", cfg.horizon, "largest weight")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("target", cfg.target, "identity, integrality, span, relations, kernel, hilbert, presentation or all");
  verify->add_flag("--all", cfg.all, "run every check");
  verify->add_option("--case", cfg.cases, "restrict to these cases, identities or forms");
  verify->add_option("--prec", cfg.prec, "fixed precision; must reach every Sturm bound");
  verify->add_option("--kmax", cfg.kmax, "weight horizon for span and kernel checks");
  verify->add_option("--horizon", cfg.horizon, "weight horizon for Hilbert checks")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "inspect the catalog");
  auto* list = catalog->add_subcommand("list", "list groups, forms, identities and presentations");
  catalog->require_subcommand(1);

  for (auto* sub : {qexp, dims, hilbert, verify, catalog}) {
    sub->add_option("--catalog", cfg.catalog_path, "catalog JSON file");
    sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    Catalog cat = Catalog::load(cfg.catalog_path);
    if (qexp->parsed()) return cmd_qexp(cfg, cat, out);
    if (dims->parsed()) return cmd_dims(cfg, cat, out);
    if (hilbert->parsed()) return cmd_hilbert(cfg, cat, out);
    if (verify->parsed()) return cmd_verify(cfg, cat, out);
    if (list->parsed()) return cmd_catalog_list(cfg, cat, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace mfring
