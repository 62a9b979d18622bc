#include "mfring/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mfring/constructors.hpp"
#include "mfring/error.hpp"

#ifndef MFRING_CATALOG_PATH
#define MFRING_CATALOG_PATH "data/catalog.json"
#endif

namespace mfring {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Groups

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

unsigned parse_level(const std::string& s, const std::string& text) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(Errc::UnknownGroup, "bad level in group '" + text + "'");
  }
  const unsigned long v = std::stoul(s);
  if (v == 0 || v > 100000) throw Error(Errc::UnknownGroup, "bad level in group '" + text + "'");
  return static_cast<unsigned>(v);
}

}  // namespace

std::vector<unsigned> GroupSpec::subgroup() const {
  const unsigned N = level;
  std::set<unsigned> elems;
  if (kind != Kind::GammaH) {
    for (unsigned a = 0; a < N; ++a)
      if (std::gcd(a, N) == 1) elems.insert(a);
    return {elems.begin(), elems.end()};
  }
  elems.insert(1 % N);
  bool grew = true;
  while (grew) {
    grew = false;
    for (unsigned x : std::vector<unsigned>(elems.begin(), elems.end())) {
      for (unsigned g : gens) {
        const auto y = static_cast<unsigned>((static_cast<unsigned long>(x) * g) % N);
        grew |= elems.insert(y).second;
      }
    }
  }
  return {elems.begin(), elems.end()};
}

bool GroupSpec::contains_minus_one() const {
  const auto s = subgroup();
  return std::binary_search(s.begin(), s.end(), (level - 1) % level);
}

std::string GroupSpec::key() const {
  std::string out = std::to_string(level) + "|";
  for (unsigned a : subgroup()) out += std::to_string(a) + ",";
  return out;
}

std::string GroupSpec::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::Full:
      out = "full";
      break;
    case Kind::Gamma0:
      out = "gamma0:" + std::to_string(level);
      break;
    case Kind::GammaH: {
      if (gens.size() == 1 && gens[0] == 1) {
        out = "gamma1:" + std::to_string(level);
        break;
      }
      out = "gammaH:" + std::to_string(level) + ":[";
      for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + std::to_string(gens[i]);
      out += "]";
      break;
    }
  }
  if (half) out += ":half";
  return out;
}

GroupSpec GroupSpec::integral() const {
  GroupSpec g = *this;
  g.half = false;
  return g;
}

GroupSpec parse_group(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto parts = split(text, ':');
  GroupSpec g;
  if (!parts.empty() && parts.back() == "half") {
    g.half = true;
    parts.pop_back();
  }
  if (parts.empty()) throw Error(Errc::UnknownGroup, "empty group");
  const std::string& kind = parts[0];
  if (kind == "full" && parts.size() == 1) {
    g.kind = GroupSpec::Kind::Full;
    g.level = 1;
  } else if (kind == "gamma0" && parts.size() == 2) {
    g.kind = GroupSpec::Kind::Gamma0;
    g.level = parse_level(parts[1], text);
  } else if (kind == "gamma1" && parts.size() == 2) {
    g.kind = GroupSpec::Kind::GammaH;
    g.level = parse_level(parts[1], text);
    g.gens = {1};
  } else if (kind == "gammaH" && parts.size() == 3) {
    g.kind = GroupSpec::Kind::GammaH;
    g.level = parse_level(parts[1], text);
    const std::string& list = parts[2];
    if (list.size() < 2 || list.front() != '[' || list.back() != ']') {
      throw Error(Errc::UnknownGroup, "expected a generator list in '" + text + "'");
    }
    for (const auto& item : split(list.substr(1, list.size() - 2), ',')) {
      if (item.empty()) continue;
      const long v = std::stol(item);
      const long r = ((v % static_cast<long>(g.level)) + g.level) % g.level;
      if (std::gcd(static_cast<unsigned long>(r), static_cast<unsigned long>(g.level)) != 1) {
        throw Error(Errc::UnknownGroup, std::to_string(v) + " is not a unit mod " + std::to_string(g.level));
      }
      g.gens.push_back(static_cast<unsigned>(r));
    }
    if (g.gens.empty()) g.gens = {1};
  } else {
    throw Error(Errc::UnknownGroup, "unknown group '" + raw + "'");
  }
  if (g.half && g.level % 4 != 0) throw Error(Errc::UnknownGroup, "half-integral weight needs 4 | N");
  return g;
}

unsigned long group_index(const GroupSpec& g) {
  const unsigned N = g.level;
  unsigned long psi = N;
  unsigned m = N;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    psi = psi / p * (p + 1);
    while (m % p == 0) m /= p;
  }
  if (m > 1) psi = psi / m * (m + 1);
  auto with_minus = g;
  if (with_minus.kind == GroupSpec::Kind::GammaH) with_minus.gens.push_back((N - 1) % N);
  const unsigned long units = euler_phi(N);
  return psi * (units / with_minus.subgroup().size());
}

std::size_t sturm_prec(const GroupSpec& g, HalfWeight w) {
  const unsigned long idx = group_index(g);
  if (w.doubled < 0) throw Error(Errc::BadWeight, "negative weight");
  if (w.is_integral()) return static_cast<std::size_t>(w.floor_integer()) * idx / 12 + 2;
  const std::size_t doubled_bound = static_cast<std::size_t>(w.doubled) * idx / 12 + 2;
  return (doubled_bound + 1) / 2;
}

// ---------------------------------------------------------------------------
// Dimension formulas

namespace {

class FormulaParser {
 public:
  FormulaParser(const std::string& s, long k) : s_(s), k_(k) {}

  long run() {
    const long v = cond();
    skip();
    if (pos_ != s_.size()) fail();
    return v;
  }

 private:
  [[noreturn]] void fail() const { throw Error(Errc::Parse, "bad dimension formula '" + s_ + "'"); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& t) {
    skip();
    if (s_.compare(pos_, t.size(), t) == 0) {
      pos_ += t.size();
      return true;
    }
    return false;
  }
  long cond() {
    const long a = sum();
    if (eat("==")) return a == sum() ? 1 : 0;
    return a;
  }
  long sum() {
    long v = prod();
    while (true) {
      if (eat("+")) v += prod();
      else if (eat("-")) v -= prod();
      else return v;
    }
  }
  long prod() {
    long v = unary();
    while (true) {
      if (eat("*")) {
        v *= unary();
      } else if (eat("%")) {
        const long m = unary();
        if (m == 0) fail();
        v = ((v % m) + m) % m;
      } else {
        return v;
      }
    }
  }
  long unary() {
    if (eat("-")) return -unary();
    return atom();
  }
  long atom() {
    skip();
    if (eat("(")) {
      const long v = cond();
      if (!eat(")")) fail();
      return v;
    }
    if (eat("[")) {
      const long a = sum();
      if (!eat("/")) fail();
      const long b = unary();
      if (!eat("]") || b == 0) fail();
      long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
      return q;
    }
    if (eat("k")) return k_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail();
    return std::stol(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  long k_;
  std::size_t pos_ = 0;
};

DimRow::Domain parse_domain(const std::string& s) {
  if (s == "even") return DimRow::Domain::Even;
  if (s == "nonnegative") return DimRow::Domain::NonNegative;
  if (s == "positive") return DimRow::Domain::Positive;
  throw Error(Errc::Catalog, "unknown weight domain '" + s + "'");
}

}  // namespace

long eval_dim_formula(const std::string& formula, long k) { return FormulaParser(formula, k).run(); }

// ---------------------------------------------------------------------------
// Loading

namespace {

HalfWeight parse_gen_weight(const std::string& entry, std::string& name) {
  const auto colon = entry.rfind(':');
  if (colon == std::string::npos) throw Error(Errc::Catalog, "generator '" + entry + "' lacks ':weight'");
  name = entry.substr(0, colon);
  return HalfWeight{std::stoi(entry.substr(colon + 1))};
}

std::string get_string(const json& j, const char* key, const std::string& fallback = "") {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<std::string>();
}

}  // namespace

Catalog Catalog::from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Catalog, std::string("catalog is not valid JSON: ") + e.what());
  }
  Catalog cat;
  try {
    for (const auto& row : root.value("groups", json::array())) {
      DimRow d;
      d.group = parse_group(row.at("group").get<std::string>());
      d.domain = parse_domain(row.at("domain").get<std::string>());
      d.formula = row.at("dim").get<std::string>();
      if (row.contains("decomposition")) {
        for (const auto& [k, v] : row.at("decomposition").items()) d.decomposition[k] = v.get<std::string>();
      }
      cat.dims_.push_back(std::move(d));
    }
    for (const auto& row : root.value("half_dims", json::array())) {
      HalfRule h;
      h.group = parse_group(row.at("group").get<std::string>());
      const std::string rule = row.at("rule").get<std::string>();
      if (rule == "same") h.kind = HalfRule::Kind::Same;
      else if (rule == "plus_one") h.kind = HalfRule::Kind::PlusOne;
      else if (rule == "vanishing_bound") h.kind = HalfRule::Kind::VanishingBound;
      else throw Error(Errc::Catalog, "unknown half-weight rule '" + rule + "'");
      h.via_case = get_string(row, "via");
      cat.half_.push_back(std::move(h));
    }
    for (const auto& row : root.value("forms", json::array())) {
      FormDef f;
      f.name = row.at("name").get<std::string>();
      f.weight = HalfWeight{row.at("weight").get<int>()};
      f.group = get_string(row, "group");
      f.character = get_string(row, "char");
      f.expr_text = row.at("expr").get<std::string>();
      f.expr = parse_expr(f.expr_text);
      if (!std::holds_alternative<AtomForm>(classify_atom(f.name))) {
        throw Error(Errc::Catalog, "form name '" + f.name + "' shadows a constructor");
      }
      if (!cat.forms_.emplace(f.name, f).second) throw Error(Errc::Catalog, "duplicate form '" + f.name + "'");
    }
    for (const auto& row : root.value("identities", json::array())) {
      Identity id;
      id.name = row.at("name").get<std::string>();
      id.group = parse_group(row.at("group").get<std::string>());
      id.weight = HalfWeight{row.at("weight").get<int>()};
      id.expr_text = row.at("expr").get<std::string>();
      id.expr = parse_expr(id.expr_text);
      cat.identities_.push_back(std::move(id));
    }
    for (const auto& row : root.value("presentations", json::array())) {
      Presentation p;
      p.label = row.at("case").get<std::string>();
      p.group = parse_group(row.at("group").get<std::string>());
      p.conductor = row.value("L", 1u);
      for (const auto& g : row.at("gens")) {
        std::string name;
        const HalfWeight w = parse_gen_weight(g.get<std::string>(), name);
        p.gens.emplace_back(name, w);
      }
      p.span = row.value("span", std::vector<std::string>{});
      if (p.span.empty())
        for (const auto& [name, w] : p.gens) p.span.push_back(name);
      p.conj = row.value("conj", std::map<std::string, std::string>{});
      p.aliases = row.value("aliases", std::map<std::string, std::string>{});
      for (const auto& r : row.value("relations", json::array())) {
        p.relations.push_back({r.at("name").get<std::string>(), r.at("poly").get<std::string>()});
      }
      p.relations_unknown = row.value("relations_unknown", false);
      if (row.contains("hilbert_num")) {
        std::vector<Integer> num;
        for (const auto& c : row.at("hilbert_num")) num.emplace_back(c.get<long>());
        p.hilbert = HilbertSeries(std::move(num), row.at("hilbert_den").get<std::vector<int>>());
      }
      p.base = get_string(row, "base");
      p.kmax_span = row.value("kmax", 4);
      p.kmax_kernel = row.value("kmax_kernel", 0);
      p.note = get_string(row, "note");
      cat.presentations_.push_back(std::move(p));
    }
    cat.integral_ = root.value("integral", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw Error(Errc::Catalog, std::string("catalog schema error: ") + e.what());
  }
  cat.finish();
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Catalog, "cannot open catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string Catalog::default_path() { return MFRING_CATALOG_PATH; }

void Catalog::finish() {
  for (const auto& row : dims_) eval_dim_formula(row.formula, 1);

  // Resolve conductors and the quasi-modular flag in dependency order.
  std::set<std::string> done, active;
  std::function<void(FormDef&)> resolve = [&](FormDef& f) {
    if (done.count(f.name)) return;
    if (!active.insert(f.name).second) throw Error(Errc::Catalog, "form '" + f.name + "' depends on itself");
    std::function<void(const Expr&)> walk = [&](const Expr& e) {
      if (e.kind == Expr::Kind::Atom) {
        const Atom a = classify_atom(e.name);
        if (const auto* ref = std::get_if<AtomForm>(&a)) {
          auto it = forms_.find(ref->name);
          if (it == forms_.end()) {
            throw Error(Errc::UnknownForm, "form '" + f.name + "' references unknown '" + ref->name + "'");
          }
          resolve(it->second);
        }
      }
      for (const auto& c : e.args) walk(c);
    };
    walk(f.expr);
    f.conductor = conductor_of(f.expr);
    f.quasi = uses_quasi(f.expr);
    active.erase(f.name);
    done.insert(f.name);
    const auto w = weight_of(f.expr);
    if (!w || *w != f.weight.doubled) {
      throw Error(Errc::Catalog, "form '" + f.name + "' declares weight " + to_string(f.weight) + " but its expression has " +
                                     (w ? to_string(HalfWeight{*w}) : std::string("no weight")));
    }
  };
  for (auto& [name, f] : forms_) resolve(f);

  for (auto& id : identities_) {
    const auto w = weight_of(id.expr);
    if (!w || *w != id.weight.doubled) throw Error(Errc::Catalog, "identity '" + id.name + "' has inconsistent weight");
    id.conductor = conductor_of(id.expr);
  }

  std::set<std::string> labels;
  for (auto& p : presentations_) {
    if (!labels.insert(p.label).second) throw Error(Errc::Catalog, "duplicate case '" + p.label + "'");
    std::multiset<int> weights;
    auto check_atom = [&](const std::string& name) {
      const Expr e = parse_expr(name);
      const auto w = weight_of(e);
      if (!w) throw Error(Errc::Catalog, "case " + p.label + ": " + name + " is a scalar");
      const unsigned c = conductor_of(e);
      if (p.conductor % c != 0) {
        throw Error(Errc::Catalog, "case " + p.label + ": " + name + " needs roots of unity of order " + std::to_string(c));
      }
      return *w;
    };
    for (const auto& [name, w] : p.gens) {
      const int actual = check_atom(name);
      if (actual != w.doubled) {
        throw Error(Errc::Catalog, "case " + p.label + ": generator " + name + " has weight " + to_string(HalfWeight{actual}));
      }
      weights.insert(w.doubled);
    }
    for (const auto& name : p.span) check_atom(name);
    for (const auto& [g, c] : p.conj) {
      const bool known_g = std::any_of(p.gens.begin(), p.gens.end(), [&](const auto& x) { return x.first == g; });
      const bool known_c = std::any_of(p.gens.begin(), p.gens.end(), [&](const auto& x) { return x.first == c; });
      if (!known_g || !known_c) throw Error(Errc::Catalog, "case " + p.label + ": conj map mentions a non-generator");
    }
    if (p.hilbert) {
      std::multiset<int> den(p.hilbert->denominator().begin(), p.hilbert->denominator().end());
      if (den != weights) throw Error(Errc::Catalog, "case " + p.label + ": Hilbert denominator does not match generator weights");
    }
  }
  for (const auto& h : half_) {
    if (h.kind == HalfRule::Kind::VanishingBound) presentation(h.via_case);
  }
  for (const auto& name : integral_) form(name);
}

const FormDef& Catalog::form(const std::string& name) const {
  auto it = forms_.find(name);
  if (it == forms_.end()) throw Error(Errc::UnknownForm, "unknown form '" + name + "'");
  return it->second;
}

const Identity& Catalog::identity(const std::string& name) const {
  for (const auto& id : identities_)
    if (id.name == name) return id;
  throw Error(Errc::UnknownIdentity, "unknown identity '" + name + "'");
}

const Presentation& Catalog::presentation(const std::string& label) const {
  for (const auto& p : presentations_)
    if (p.label == label) return p;
  throw Error(Errc::UnknownCase, "unknown case '" + label + "'");
}

const DimRow* Catalog::dim_row(const GroupSpec& g) const {
  const std::string key = g.key();
  for (const auto& row : dims_)
    if (row.group.key() == key) return &row;
  return nullptr;
}

const HalfRule* Catalog::half_rule(const GroupSpec& g) const {
  const std::string key = g.key();
  for (const auto& h : half_)
    if (h.group.key() == key) return &h;
  return nullptr;
}

bool Catalog::admissible(const GroupSpec& g, HalfWeight w) const {
  if (w.doubled < 0) return false;
  if (!w.is_integral()) return g.half && half_rule(g) != nullptr && admissible(g, HalfWeight{w.doubled - 1});
  const DimRow* row = dim_row(g);
  if (!row) return false;
  const int k = w.floor_integer();
  switch (row->domain) {
    case DimRow::Domain::Even:
      return k % 2 == 0;
    case DimRow::Domain::Positive:
      return k >= 1;
    case DimRow::Domain::NonNegative:
      return true;
  }
  return false;
}

long Catalog::dim(const GroupSpec& g, HalfWeight w) const {
  if (w.doubled < 0) throw Error(Errc::OutOfTable, "negative weight");
  if (!w.is_integral()) {
    const HalfRule* h = g.half ? half_rule(g) : nullptr;
    if (!h) throw Error(Errc::OutOfTable, "no half-integral dimension rule for " + g.to_string());
    const HalfWeight below{w.doubled - 1};
    switch (h->kind) {
      case HalfRule::Kind::Same:
        return dim(g.integral(), below);
      case HalfRule::Kind::PlusOne:
        return 1 + dim(g.integral(), below);
      case HalfRule::Kind::VanishingBound:
        throw Error(Errc::OutOfTable, "dimension of " + g.to_string() + " at weight " + to_string(w) +
                                          " comes from a computed bound");
    }
  }
  const DimRow* row = dim_row(g);
  if (!row) throw Error(Errc::UnknownGroup, "no dimension row for " + g.to_string());
  const int k = w.floor_integer();
  if (row->domain == DimRow::Domain::Even && k % 2 != 0) {
    throw Error(Errc::OutOfTable, "odd weight " + std::to_string(k) + " outside the table for " + g.to_string());
  }
  if (row->domain == DimRow::Domain::Positive && k == 0) {
    throw Error(Errc::OutOfTable, "weight 0 outside the table for " + g.to_string());
  }
  return eval_dim_formula(row->formula, k);
}

std::optional<int> Catalog::weight_of(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Number:
      return std::nullopt;
    case Expr::Kind::Atom: {
      const Atom a = classify_atom(e.name);
      if (const auto* ref = std::get_if<AtomForm>(&a)) return form(ref->name).weight.doubled;
      return atom_weight(a);
    }
    case Expr::Kind::Apply:
      break;
  }
  const std::string& op = e.name;
  if (op == "zeta") return std::nullopt;
  if (op == "add" || op == "sub" || op == "neg" || op == "conj") {
    const auto first = weight_of(e.args.front());
    for (const auto& a : e.args) {
      if (weight_of(a) != first) throw Error(Errc::Catalog, "'" + op + "' mixes terms of different weight");
    }
    return first;
  }
  if (op == "mul") {
    std::optional<int> w;
    for (const auto& a : e.args) {
      if (auto x = weight_of(a)) w = w.value_or(0) + *x;
    }
    return w;
  }
  if (op == "pow") {
    auto w = weight_of(e.args.front());
    if (w) *w *= static_cast<int>(e.ints[0]);
    return w;
  }
  if (op == "V" || op == "low") {
    auto w = weight_of(e.args.front());
    if (!w) throw Error(Errc::Catalog, "'" + op + "' applied to a scalar");
    return w;
  }
  throw Error(Errc::Parse, "unknown operator '" + op + "'");
}

unsigned Catalog::conductor_of(const Expr& e) const {
  if (e.kind == Expr::Kind::Number) return 1;
  if (e.kind == Expr::Kind::Atom) {
    const Atom a = classify_atom(e.name);
    if (const auto* ref = std::get_if<AtomForm>(&a)) {
      const FormDef& f = form(ref->name);
      return f.conductor != 0 ? f.conductor : conductor_of(f.expr);
    }
    return atom_conductor(a);
  }
  unsigned L = 1;
  if (e.name == "zeta") {
    const long a = e.ints[0], b = e.ints[1];
    L = static_cast<unsigned>(b / std::gcd(std::labs(a), b));
  }
  for (const auto& c : e.args) L = std::lcm(L, conductor_of(c));
  return L;
}

bool Catalog::uses_quasi(const Expr& e) const {
  if (e.kind == Expr::Kind::Atom) {
    const Atom a = classify_atom(e.name);
    if (const auto* E = std::get_if<AtomE>(&a)) return E->k == 2;
    if (const auto* ref = std::get_if<AtomForm>(&a)) return uses_quasi(form(ref->name).expr);
    return false;
  }
  return std::any_of(e.args.begin(), e.args.end(), [&](const Expr& c) { return uses_quasi(c); });
}

// ---------------------------------------------------------------------------
// Evaluation

QSeries Evaluator::form(const std::string& name, std::size_t prec) {
  if (auto it = cache_.find(name); it != cache_.end() && it->second.prec() >= prec) return it->second.truncate(prec);
  const FormDef& f = catalog_->form(name);
  if (ctx_->conductor() % f.conductor != 0) {
    throw Error(Errc::ConductorMismatch, "form '" + name + "' needs roots of unity of order " + std::to_string(f.conductor) +
                                             ", field has conductor " + std::to_string(ctx_->conductor()));
  }
  QSeries s = series(f.expr, prec);
  cache_.insert_or_assign(name, s);
  return s;
}

QSeries Evaluator::series(const Expr& e, std::size_t prec) {
  Value v = eval(e, prec);
  if (auto* s = std::get_if<QSeries>(&v)) return std::move(*s);
  return QSeries::constant(std::get<CycloNum>(v), prec);
}

QSeries Evaluator::atom(const Atom& a, std::size_t prec) {
  const FieldCtx& ctx = *ctx_;
  return std::visit(
      [&](const auto& x) -> QSeries {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AtomE>) return eisenstein_E(x.k, prec, ctx);
        else if constexpr (std::is_same_v<T, AtomC>) return eisenstein_C(x.N, prec, ctx);
        else if constexpr (std::is_same_v<T, AtomF>) return eis_f(x.k, parse_character(x.chi), prec, ctx);
        else if constexpr (std::is_same_v<T, AtomG>) return eis_g(x.k, parse_character(x.chi), prec, ctx);
        else if constexpr (std::is_same_v<T, AtomG2>)
          return eis_g2(x.k, parse_character(x.chi), parse_character(x.psi), prec, ctx);
        else if constexpr (std::is_same_v<T, AtomTheta>) {
          const std::size_t inner = (prec - 1 + x.h - 1) / x.h + 1;
          return v_operator(theta(inner, ctx), x.h).truncate(prec);
        } else if constexpr (std::is_same_v<T, AtomAlpha23>) return alpha23(prec, ctx);
        else if constexpr (std::is_same_v<T, AtomBqf>) return theta_bqf(x.a, x.b, x.c, prec, ctx);
        else return form(x.name, prec);
      },
      a);
}

Evaluator::Value Evaluator::eval(const Expr& e, std::size_t prec) {
  const FieldCtx& ctx = *ctx_;
  if (prec == 0) throw Error(Errc::InvalidArgument, "series precision must be positive");
  switch (e.kind) {
    case Expr::Kind::Number:
      return CycloNum(ctx, e.number);
    case Expr::Kind::Atom:
      return atom(classify_atom(e.name), prec);
    case Expr::Kind::Apply:
      break;
  }
  const std::string& op = e.name;
  if (op == "zeta") return root_of_unity(ctx, e.ints[0], static_cast<unsigned>(e.ints[1]));
  if (op == "V") {
    const auto h = static_cast<std::size_t>(e.ints[0]);
    const std::size_t inner = (prec - 1 + h - 1) / h + 1;
    return v_operator(series(e.args[0], inner), static_cast<unsigned>(h)).truncate(prec);
  }
  if (op == "low") return lowered(series(e.args[0], prec), static_cast<unsigned>(e.ints[0]));
  if (op == "conj") {
    Value v = eval(e.args[0], prec);
    if (auto* s = std::get_if<QSeries>(&v)) return conj_series(*s);
    return conj(std::get<CycloNum>(v));
  }
  if (op == "neg") {
    Value v = eval(e.args[0], prec);
    if (auto* s = std::get_if<QSeries>(&v)) return -*s;
    return -std::get<CycloNum>(v);
  }
  if (op == "pow") {
    Value v = eval(e.args[0], prec);
    const auto k = static_cast<unsigned>(e.ints[0]);
    if (auto* s = std::get_if<QSeries>(&v)) return s->pow(k);
    return std::get<CycloNum>(v).pow(k);
  }
  if (op == "add" || op == "sub") {
    std::optional<Value> acc;
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      Value v = eval(e.args[i], prec);
      if (!acc) {
        acc = std::move(v);
        continue;
      }
      if (acc->index() != v.index()) throw Error(Errc::Catalog, "'" + op + "' mixes scalars and series");
      const bool minus = op == "sub";
      if (auto* s = std::get_if<QSeries>(&*acc)) {
        *s = minus ? *s - std::get<QSeries>(v) : *s + std::get<QSeries>(v);
      } else {
        auto& c = std::get<CycloNum>(*acc);
        c = minus ? c - std::get<CycloNum>(v) : c + std::get<CycloNum>(v);
      }
    }
    return std::move(*acc);
  }
  if (op == "mul") {
    CycloNum scalar(ctx, 1);
    std::optional<QSeries> product;
    for (const auto& a : e.args) {
      Value v = eval(a, prec);
      if (auto* s = std::get_if<QSeries>(&v)) {
        product = product ? *product * *s : std::move(*s);
      } else {
        scalar *= std::get<CycloNum>(v);
      }
    }
    if (!product) return scalar;
    if (scalar.is_one()) return std::move(*product);
    return scalar * *product;
  }
  throw Error(Errc::Parse, "unknown operator '" + op + "'");
}

QSeries lookup_form(const Catalog& catalog, const std::string& name_or_expr, std::size_t prec) {
  const Expr e = parse_expr(name_or_expr);
  catalog.weight_of(e);
  const unsigned L = catalog.conductor_of(e);
  Evaluator ev(catalog, cyclo_context(L));
  return ev.series(e, prec);
}

}  // namespace mfring
