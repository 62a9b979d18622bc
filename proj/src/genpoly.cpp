#include "mfring/genpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "mfring/error.hpp"

namespace mfring {

GenPoly::GenPoly(const FieldCtx& ctx, std::vector<HalfWeight> weights) : ctx_(&ctx), weights_(std::move(weights)) {}

GenPoly GenPoly::constant(const FieldCtx& ctx, std::vector<HalfWeight> weights, const CycloNum& c) {
  GenPoly p(ctx, std::move(weights));
  p.add_term(Exponents(p.weights_.size(), 0), c);
  return p;
}

GenPoly GenPoly::variable(const FieldCtx& ctx, std::vector<HalfWeight> weights, std::size_t i) {
  GenPoly p(ctx, std::move(weights));
  Exponents e(p.weights_.size(), 0);
  e.at(i) = 1;
  p.add_term(e, CycloNum(ctx, 1));
  return p;
}

GenPoly GenPoly::monomial(const FieldCtx& ctx, std::vector<HalfWeight> weights, const Exponents& e) {
  GenPoly p(ctx, std::move(weights));
  if (e.size() != p.weights_.size()) throw Error(Errc::InvalidArgument, "exponent vector has the wrong length");
  p.add_term(e, CycloNum(ctx, 1));
  return p;
}

void GenPoly::add_term(const Exponents& e, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool GenPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](unsigned x) { return x == 0; }));
}

int monomial_weight(const std::vector<HalfWeight>& weights, const Exponents& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(e[i]) * weights[i].doubled;
  return w;
}

std::optional<int> GenPoly::weight() const {
  std::optional<int> w;
  for (const auto& [e, c] : terms_) {
    const int x = monomial_weight(weights_, e);
    if (w && *w != x) throw Error(Errc::Catalog, "polynomial is not homogeneous");
    w = x;
  }
  return w;
}

GenPoly GenPoly::operator-() const {
  GenPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

GenPoly operator+(const GenPoly& a, const GenPoly& b) {
  GenPoly out(a);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

GenPoly operator-(const GenPoly& a, const GenPoly& b) { return a + (-b); }

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly out(*a.ctx_, a.weights_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GenPoly operator*(const CycloNum& c, const GenPoly& a) {
  GenPoly out(*a.ctx_, a.weights_);
  for (const auto& [e, x] : a.terms_) out.add_term(e, c * x);
  return out;
}

GenPoly GenPoly::pow(unsigned e) const {
  GenPoly result = constant(*ctx_, weights_, CycloNum(*ctx_, 1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

GenPoly GenPoly::conjugate(const std::vector<std::size_t>& perm) const {
  GenPoly out(*ctx_, weights_);
  for (const auto& [e, c] : terms_) {
    Exponents f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] += e[i];
    out.add_term(f, conj(c));
  }
  return out;
}

std::vector<CycloNum> GenPoly::coordinates(const std::vector<Exponents>& basis) const {
  std::vector<CycloNum> out(basis.size(), CycloNum(*ctx_));
  for (const auto& [e, c] : terms_) {
    auto it = std::lower_bound(basis.begin(), basis.end(), e);
    if (it == basis.end() || *it != e) throw Error(Errc::InvalidArgument, "monomial outside the basis");
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

std::vector<Exponents> weighted_monomials(const std::vector<HalfWeight>& weights, HalfWeight k) {
  std::vector<Exponents> out;
  if (k.doubled < 0) return out;
  Exponents e(weights.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == weights.size()) {
      if (left == 0) out.push_back(e);
      return;
    }
    const int w = weights[i].doubled;
    if (w <= 0) throw Error(Errc::InvalidArgument, "generator weights must be positive");
    for (int x = 0; x * w <= left; ++x) {
      e[i] = static_cast<unsigned>(x);
      rec(i + 1, left - x * w);
    }
    e[i] = 0;
  };
  rec(0, k.doubled);
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const Presentation& p, const FieldCtx& ctx,
             const std::map<std::string, GenPoly>& named, int depth = 0)
      : s_(text), p_(p), ctx_(ctx), named_(named), depth_(depth) {
    for (const auto& [name, w] : p.gens) {
      names_.push_back(name);
      weights_.push_back(w);
    }
    perm_.resize(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
      auto it = p.conj.find(names_[i]);
      perm_[i] = it == p.conj.end() ? npos : index_of(it->second);
    }
  }

  GenPoly run() {
    GenPoly v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return v;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, "case " + p_.label + ": '" + s_ + "': " + why);
  }
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return npos;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  GenPoly constant(const CycloNum& c) const { return GenPoly::constant(ctx_, weights_, c); }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  GenPoly sum() {
    GenPoly v = product();
    while (true) {
      if (eat('+')) v = v + product();
      else if (eat('-')) v = v - product();
      else return v;
    }
  }

  GenPoly product() {
    GenPoly v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        const GenPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        v = d.terms().begin()->second.inverse() * v;
      } else {
        return v;
      }
    }
  }

  GenPoly unary() {
    if (eat('-')) return -unary();
    GenPoly base = primary();
    if (eat('^')) {
      const long e = integer();
      if (e < 0) fail("negative exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  GenPoly conjugate(const GenPoly& v) {
    for (const auto& [e, c] : v.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0 && perm_[i] == npos) fail("no conjugate declared for " + names_[i]);
      }
    }
    std::vector<std::size_t> perm = perm_;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] == npos) perm[i] = i;
    return v.conjugate(perm);
  }

  GenPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      GenPoly v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(CycloNum(ctx_, integer()));
    const std::string id = identifier();
    if (id.empty()) fail("unexpected '" + std::string(1, c) + "'");
    if (id == "zeta" && eat('(')) {
      const long a = integer();
      if (!eat('/')) fail("expected zeta(a/b)");
      const long b = integer();
      if (!eat(')') || b <= 0) fail("expected zeta(a/b)");
      return constant(root_of_unity(ctx_, a, static_cast<unsigned>(b)));
    }
    if (id == "conj" && eat('(')) {
      GenPoly v = sum();
      if (!eat(')')) fail("expected ')'");
      return conjugate(v);
    }
    if (const std::size_t i = index_of(id); i != npos) return GenPoly::variable(ctx_, weights_, i);
    if (auto it = p_.aliases.find(id); it != p_.aliases.end()) {
      if (depth_ > 16) fail("alias recursion");
      return PolyParser(it->second, p_, ctx_, named_, depth_ + 1).run();
    }
    if (auto it = named_.find(id); it != named_.end()) return it->second;
    throw Error(Errc::UnknownForm, "case " + p_.label + ": unknown name '" + id + "' in '" + s_ + "'");
  }

  const std::string& s_;
  const Presentation& p_;
  const FieldCtx& ctx_;
  const std::map<std::string, GenPoly>& named_;
  std::vector<std::string> names_;
  std::vector<HalfWeight> weights_;
  std::vector<std::size_t> perm_;
  int depth_;
  std::size_t pos_ = 0;
};

}  // namespace

GenPoly parse_genpoly(const std::string& text, const Presentation& p, const FieldCtx& ctx,
                      const std::map<std::string, GenPoly>& named) {
  return PolyParser(text, p, ctx, named).run();
}

std::vector<NamedPoly> presentation_relations(const Presentation& p, const FieldCtx& ctx) {
  std::vector<NamedPoly> out;
  std::map<std::string, GenPoly> named;
  for (const auto& r : p.relations) {
    GenPoly poly = parse_genpoly(r.text, p, ctx, named);
    if (poly.is_zero()) throw Error(Errc::Catalog, "case " + p.label + ": relation " + r.name + " is the zero polynomial");
    poly.weight();
    named.insert_or_assign(r.name, poly);
    out.push_back({r.name, std::move(poly)});
  }
  return out;
}

MonomialEvaluator::MonomialEvaluator(std::vector<QSeries> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw Error(Errc::InvalidArgument, "no generators");
  prec_ = gens_.front().prec();
  for (const auto& g : gens_) prec_ = std::min(prec_, g.prec());
}

const QSeries& MonomialEvaluator::operator()(const Exponents& e) {
  if (auto it = cache_.find(e); it != cache_.end()) return it->second;
  std::size_t i = 0;
  while (i < e.size() && e[i] == 0) ++i;
  QSeries value = i == e.size() ? QSeries::one(gens_.front().field(), prec_) : QSeries(gens_.front().field(), 1);
  if (i < e.size()) {
    Exponents smaller = e;
    --smaller[i];
    value = (*this)(smaller) * gens_[i].truncate(prec_);
  }
  return cache_.emplace(e, std::move(value)).first->second;
}

QSeries MonomialEvaluator::eval(const GenPoly& p) {
  QSeries out(gens_.front().field(), prec_);
  for (const auto& [e, c] : p.terms()) out = out + c * (*this)(e);
  return out;
}

}  // namespace mfring
